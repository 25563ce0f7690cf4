#include "bipcm/audit.hpp"

#include <algorithm>
#include <sstream>

namespace bipcm {

namespace {

std::string vertex_name(Side side, int index) {
    return (side == Side::X ? "x" : "y") + std::to_string(index);
}

int colour_degree(const Colouring& col, Side side, int index, int colour) {
    int deg = 0;
    if (side == Side::X) {
        for (int y = 0; y < col.n_right(); ++y) deg += col.at(index, y) == colour;
    } else {
        for (int x = 0; x < col.n_left(); ++x) deg += col.at(x, index) == colour;
    }
    return deg;
}

void check_preconditions(const Colouring& col, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!col.complete())
        throw AuditPreconditionError(AuditErrorKind::NotComplete,
                                     "colouring is not complete: " +
                                         std::to_string(col.absent_count()) + " absent edge(s)");
    const long long bound = static_cast<long long>(col.colours()) * n + 1;
    if (col.n_left() < bound || col.n_right() < bound) {
        const bool left = col.n_left() < bound;
        throw AuditPreconditionError(
            AuditErrorKind::SidesTooSmall,
            std::string(left ? "N = " : "M = ") +
                std::to_string(left ? col.n_left() : col.n_right()) +
                " < kn+1 = " + std::to_string(bound));
    }
    if (auto cm = find_connected_matching(col, n + 1)) {
        std::ostringstream os;
        os << "monochromatic connected " << (n + 1) << "-matching present in colour "
           << cm->first;
        throw AuditPreconditionError(AuditErrorKind::ConnectedMatchingPresent, os.str(),
                                     cm->first, cm->second);
    }
}

}  // namespace

SpecialReport build_special_report(const Colouring& col, int n) {
    check_preconditions(col, n);

    SpecialReport rep;
    rep.n = n;
    rep.x_vertices.assign(col.n_left(), {});
    rep.y_vertices.assign(col.n_right(), {});

    for (int c = 1; c <= col.colours(); ++c) {
        for (const Component& comp : components(col, c)) {
            ComponentStats st;
            st.colour = c;
            st.certificate = max_matching(col, comp);
            const int idx = static_cast<int>(rep.comps.size());
            for (const VertexRef& v : st.certificate.cover) {
                if (v.side == Side::X) {
                    ++st.cover_x;
                    rep.x_vertices[v.index].cover_of.push_back(idx);
                } else {
                    ++st.cover_y;
                    rep.y_vertices[v.index].cover_of.push_back(idx);
                }
            }
            st.rest_x = static_cast<int>(comp.x_vertices.size()) - st.cover_x;
            st.rest_y = static_cast<int>(comp.y_vertices.size()) - st.cover_y;
            // Minimality of the cover forces these; a violation is a solver bug.
            if (st.rest_x < st.cover_y || st.rest_y < st.cover_x)
                throw std::logic_error("cover minimality violated in special report");
            rep.comps.push_back(std::move(st));
        }
    }

    auto mark_special = [&](std::vector<VertexAudit>& side, Side s) {
        for (size_t i = 0; i < side.size(); ++i) {
            VertexAudit& v = side[i];
            if (v.cover_of.empty())
                throw std::logic_error("vertex " + vertex_name(s, static_cast<int>(i)) +
                                       " belongs to no canonical cover");
            if (v.cover_of.size() == 1) {
                v.special = true;
                v.special_colour = rep.comps[v.cover_of.front()].colour;
                ++rep.special_count;
            }
        }
    };
    mark_special(rep.x_vertices, Side::X);
    mark_special(rep.y_vertices, Side::Y);

    // Somewhat special: a non-special cover vertex of C_i with a special
    // vertex of C_i's colour on the other side, inside the same cover.
    for (size_t i = 0; i < rep.comps.size(); ++i) {
        ComponentStats& st = rep.comps[i];
        bool special_in_x = false, special_in_y = false;
        for (const VertexRef& v : st.certificate.cover) {
            const VertexAudit& a =
                v.side == Side::X ? rep.x_vertices[v.index] : rep.y_vertices[v.index];
            if (a.special) (v.side == Side::X ? special_in_x : special_in_y) = true;
        }
        for (const VertexRef& v : st.certificate.cover) {
            VertexAudit& a = v.side == Side::X ? rep.x_vertices[v.index] : rep.y_vertices[v.index];
            if (a.special) continue;
            const bool opposite = v.side == Side::X ? special_in_y : special_in_x;
            if (opposite) {
                ++st.somewhat;
                a.somewhat_special = true;
            }
        }
        rep.somewhat_total += st.somewhat;
    }
    return rep;
}

CheckResult check_high_degree_claim(const Colouring& col, const SpecialReport& rep) {
    CheckResult res;
    // cover membership per (vertex, colour)
    std::vector<std::vector<char>> covered_x(col.n_left(),
                                             std::vector<char>(col.colours() + 1, 0));
    std::vector<std::vector<char>> covered_y(col.n_right(),
                                             std::vector<char>(col.colours() + 1, 0));
    for (const ComponentStats& st : rep.comps)
        for (const VertexRef& v : st.certificate.cover)
            (v.side == Side::X ? covered_x[v.index] : covered_y[v.index])[st.colour] = 1;

    auto scan = [&](Side side, int count) {
        for (int i = 0; i < count; ++i) {
            for (int c = 1; c <= col.colours(); ++c) {
                const int deg = colour_degree(col, side, i, c);
                if (deg >= rep.n + 1 &&
                    !(side == Side::X ? covered_x[i] : covered_y[i])[c]) {
                    res.pass = false;
                    res.violations.push_back(vertex_name(side, i) + " has " +
                                             std::to_string(deg) + " edges of colour " +
                                             std::to_string(c) +
                                             " but is outside its canonical cover");
                }
            }
        }
    };
    scan(Side::X, col.n_left());
    scan(Side::Y, col.n_right());
    return res;
}

CheckResult check_special_degree(const Colouring& col, const SpecialReport& rep) {
    CheckResult res;
    const long long k = col.colours();
    auto scan = [&](const std::vector<VertexAudit>& side, Side s, long long opposite) {
        const long long bound = opposite - (k - 1) * rep.n;
        for (size_t i = 0; i < side.size(); ++i) {
            if (!side[i].special) continue;
            const int c = side[i].special_colour;
            const int deg = colour_degree(col, s, static_cast<int>(i), c);
            if (deg < bound) {
                res.pass = false;
                res.violations.push_back(vertex_name(s, static_cast<int>(i)) +
                                         " special in colour " + std::to_string(c) +
                                         " has degree " + std::to_string(deg) + " < " +
                                         std::to_string(bound));
            }
        }
    };
    scan(rep.x_vertices, Side::X, col.n_right());
    scan(rep.y_vertices, Side::Y, col.n_left());
    return res;
}

CheckResult check_special_sides(const Colouring& col, const SpecialReport& rep) {
    CheckResult res;
    for (int c = 1; c <= col.colours(); ++c) {
        // Components of colour c that contain a special vertex of colour c.
        int special_comps = 0;
        for (const ComponentStats& st : rep.comps) {
            if (st.colour != c) continue;
            for (const VertexRef& v : st.certificate.cover) {
                const VertexAudit& a =
                    v.side == Side::X ? rep.x_vertices[v.index] : rep.y_vertices[v.index];
                if (a.special && a.special_colour == c) {
                    ++special_comps;
                    break;
                }
            }
        }
        if (special_comps < 2) continue;  // condition applies to two or more components
        bool seen_x = false, seen_y = false;
        for (size_t i = 0; i < rep.x_vertices.size(); ++i)
            if (rep.x_vertices[i].special && rep.x_vertices[i].special_colour == c) seen_x = true;
        for (size_t i = 0; i < rep.y_vertices.size(); ++i)
            if (rep.y_vertices[i].special && rep.y_vertices[i].special_colour == c) seen_y = true;
        if (seen_x && seen_y) {
            res.pass = false;
            res.violations.push_back("colour " + std::to_string(c) +
                                     " has special vertices on both sides across " +
                                     std::to_string(special_comps) + " special components");
        }
    }
    return res;
}

CountAudit audit_special_count(const Colouring& col, const SpecialReport& rep) {
    CountAudit out;
    out.special_count = rep.special_count;
    const long long N = col.n_left(), M = col.n_right(), k = col.colours(), n = rep.n;
    const Rational rhs = Rational(N * M, n) - Rational((N + M) * (k - 2)) +
                         Rational(rep.somewhat_total) * (Rational(std::min(N, M), n) - Rational(k));
    out.rhs = rhs;
    out.margin = Rational(out.special_count) - rhs;
    out.pass = Rational(out.special_count) >= rhs;
    return out;
}

CheckResult check_high_degree_claim(const Colouring& col, int n) {
    return check_high_degree_claim(col, build_special_report(col, n));
}
CheckResult check_special_degree(const Colouring& col, int n) {
    return check_special_degree(col, build_special_report(col, n));
}
CheckResult check_special_sides(const Colouring& col, int n) {
    return check_special_sides(col, build_special_report(col, n));
}
CountAudit audit_special_count(const Colouring& col, int n) {
    return audit_special_count(col, build_special_report(col, n));
}

std::string serialize_report(const Colouring& col, const SpecialReport& rep,
                             const CountAudit& count) {
    std::ostringstream os;
    os << "special-report n=" << rep.n << " N=" << col.n_left() << " M=" << col.n_right()
       << " k=" << col.colours() << '\n';
    for (size_t i = 0; i < rep.comps.size(); ++i) {
        const ComponentStats& st = rep.comps[i];
        os << "component " << i << " colour=" << st.colour << " x=" << st.cover_x
           << " y=" << st.cover_y << " z=" << st.rest_x << " w=" << st.rest_y
           << " t=" << st.somewhat << '\n';
    }
    os << "s=" << rep.special_count << '\n';
    os << "T=" << rep.somewhat_total << '\n';
    os << "rhs=" << count.rhs << '\n';
    os << "pass=" << (count.pass ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace bipcm
