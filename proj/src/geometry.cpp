#include "copnum/geometry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace copnum {

bool is_prime(unsigned x) {
    if (x < 2) return false;
    for (unsigned d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
    if (q < 2) return std::nullopt;
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, e);
}

bool field_supported(unsigned q) {
    if (is_prime(q)) return q <= kMaxPrimeOrder;
    return std::find(std::begin(kTabulatedPrimePowers), std::end(kTabulatedPrimePowers), q) !=
           std::end(kTabulatedPrimePowers);
}

namespace {

// Monic irreducible polynomials, low coefficient first, leading 1 omitted.
std::vector<unsigned> irreducible_for(unsigned q) {
    switch (q) {
        case 4: return {1, 1};         // x^2 + x + 1 over GF(2)
        case 8: return {1, 1, 0};      // x^3 + x + 1
        case 9: return {1, 0};         // x^2 + 1 over GF(3)
        case 16: return {1, 1, 0, 0};  // x^4 + x + 1
        case 25: return {2, 0};        // x^2 + 2 over GF(5)
        case 27: return {1, 2, 0};     // x^3 + 2x + 1 over GF(3)
        default: return {};
    }
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (!field_supported(q))
        throw std::invalid_argument("field of order " + std::to_string(q) + " is not supported");
    p_ = pp->first;
    e_ = pp->second;

    auto digits = [&](unsigned a) {
        std::vector<unsigned> d(e_);
        for (unsigned i = 0; i < e_; ++i, a /= p_) d[i] = a % p_;
        return d;
    };
    auto pack = [&](const std::vector<unsigned>& d) {
        unsigned a = 0;
        for (unsigned i = e_; i-- > 0;) a = a * p_ + d[i];
        return a;
    };
    const auto modulus = irreducible_for(q);

    add_.resize(q * q);
    mul_.resize(q * q);
    for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a);
        for (unsigned b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<unsigned> sum(e_);
            for (unsigned i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = static_cast<std::uint16_t>(pack(sum));

            if (e_ == 1) {
                mul_[a * q + b] = static_cast<std::uint16_t>((a * b) % p_);
                continue;
            }
            std::vector<unsigned> prod(2 * e_ - 1, 0);
            for (unsigned i = 0; i < e_; ++i)
                for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            // x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
            for (unsigned deg = 2 * e_ - 1; deg-- > e_;) {
                unsigned c = prod[deg];
                if (c == 0) continue;
                prod[deg] = 0;
                for (unsigned i = 0; i < e_; ++i) {
                    unsigned t = (c * modulus[i]) % p_;
                    prod[deg - e_ + i] = (prod[deg - e_ + i] + p_ - t) % p_;
                }
            }
            prod.resize(e_);
            mul_[a * q + b] = static_cast<std::uint16_t>(pack(prod));
        }
    }
    neg_.resize(q);
    inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            if (add(a, b) == 0) neg_[a] = static_cast<std::uint16_t>(b);
            if (a != 0 && mul(a, b) == 1) inv_[a] = static_cast<std::uint16_t>(b);
        }
    if (!satisfies_axioms())
        throw std::logic_error("tables for GF(" + std::to_string(q) + ") violate the field axioms");
}

bool FiniteField::satisfies_axioms() const {
    const unsigned q = q_;
    for (unsigned a = 0; a < q; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
        if (add(a, neg(a)) != 0) return false;
        if (a != 0 && mul(a, inv(a)) != 1) return false;
        for (unsigned b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
            if (a != 0 && b != 0 && mul(a, b) == 0) return false;
            for (unsigned c = 0; c < q; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) return false;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
            }
        }
    }
    return true;
}

FiniteField finite_field(unsigned q) { return FiniteField(q); }

IncidenceStructure projective_plane(unsigned q) {
    const FiniteField f(q);
    // Normalised homogeneous coordinates: first non-zero entry equals 1.
    std::vector<std::array<unsigned, 3>> coords;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c) {
                std::array<unsigned, 3> v{a, b, c};
                auto lead = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
                if (lead != v.end() && *lead == 1) coords.push_back(v);
            }

    IncidenceStructure s;
    s.points = coords.size();
    for (const auto& l : coords) {
        LineSet pts;
        for (std::uint32_t i = 0; i < coords.size(); ++i) {
            const auto& x = coords[i];
            unsigned dot = f.add(f.add(f.mul(l[0], x[0]), f.mul(l[1], x[1])), f.mul(l[2], x[2]));
            if (dot == 0) pts.push_back(i);
        }
        s.lines.push_back(std::move(pts));
    }
    return s;
}

IncidenceStructure affine_plane(unsigned q) {
    const FiniteField f(q);
    auto point = [q](unsigned x, unsigned y) { return static_cast<std::uint32_t>(x * q + y); };
    IncidenceStructure s;
    s.points = static_cast<std::size_t>(q) * q;
    std::vector<std::uint32_t> cls;
    // Class m < q: lines y = m x + b. Class q: vertical lines x = c.
    for (unsigned m = 0; m < q; ++m)
        for (unsigned b = 0; b < q; ++b) {
            LineSet pts;
            for (unsigned x = 0; x < q; ++x) pts.push_back(point(x, f.add(f.mul(m, x), b)));
            std::sort(pts.begin(), pts.end());
            s.lines.push_back(std::move(pts));
            cls.push_back(m);
        }
    for (unsigned c = 0; c < q; ++c) {
        LineSet pts;
        for (unsigned y = 0; y < q; ++y) pts.push_back(point(c, y));
        s.lines.push_back(std::move(pts));
        cls.push_back(q);
    }
    s.parallel_class = std::move(cls);
    return s;
}

IncidenceStructure remove_parallel_classes(const IncidenceStructure& a, unsigned k) {
    if (!a.parallel_class) throw std::invalid_argument("structure has no parallel-class labels");
    const auto& cls = *a.parallel_class;
    std::vector<std::uint32_t> labels(cls.begin(), cls.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    // k classes out of q+1 with k <= q keeps at least one class alive.
    if (k < 1 || k + 1 > labels.size())
        throw std::invalid_argument("number of deleted classes must lie in [1, " +
                                    std::to_string(labels.size() - 1) + "], got " + std::to_string(k));
    const std::uint32_t cutoff = labels[labels.size() - k];

    IncidenceStructure out;
    out.points = a.points;
    std::vector<std::uint32_t> kept;
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        if (cls[i] >= cutoff) continue;
        out.lines.push_back(a.lines[i]);
        kept.push_back(cls[i]);
    }
    out.parallel_class = std::move(kept);
    return out;
}

StructureReport validate_structure(const IncidenceStructure& s) {
    StructureReport rep;
    const std::size_t P = s.points;
    const std::size_t L = s.lines.size();
    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    // join[a * P + b]: the line through points a and b.
    std::vector<std::uint32_t> join(P * P, kNone);
    for (std::uint32_t li = 0; li < L; ++li) {
        const auto& line = s.lines[li];
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                auto a = line[i], b = line[j];
                auto& slot = join[a * P + b];
                if (slot != kNone && slot != li && rep.partial_linear) {
                    rep.partial_linear = false;
                    rep.partial_linear_violation = PointPair{a, b};
                    rep.shared_by_lines = PointPair{slot, li};
                }
                slot = li;
                join[b * P + a] = li;
            }
    }

    for (std::uint32_t a = 0; a < P && rep.unique_line_per_points; ++a)
        for (std::uint32_t b = a + 1; b < P; ++b)
            if (join[a * P + b] == kNone) {
                rep.unique_line_per_points = false;
                rep.points_without_line = PointPair{a, b};
                break;
            }

    std::vector<std::vector<bool>> on(L, std::vector<bool>(P, false));
    for (std::size_t li = 0; li < L; ++li)
        for (auto p : s.lines[li]) on[li][p] = true;
    for (std::uint32_t a = 0; a < L && rep.unique_point_per_lines; ++a)
        for (std::uint32_t b = a + 1; b < L; ++b) {
            std::size_t common = 0;
            for (auto p : s.lines[a]) common += on[b][p];
            if (common != 1) {
                rep.unique_point_per_lines = false;
                rep.lines_without_point = PointPair{a, b};
                break;
            }
        }

    // Four points, no three on a common line.
    auto collinear = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        auto l = join[a * P + b];
        return l != kNone && on[l][c];
    };
    for (std::uint32_t a = 0; a < P && !rep.four_points_in_general_position; ++a)
        for (std::uint32_t b = a + 1; b < P && !rep.four_points_in_general_position; ++b)
            for (std::uint32_t c = b + 1; c < P && !rep.four_points_in_general_position; ++c) {
                if (collinear(a, b, c)) continue;
                for (std::uint32_t d = c + 1; d < P; ++d) {
                    if (collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d)) continue;
                    rep.four_points_in_general_position = true;
                    rep.general_quadrangle = std::vector<std::uint32_t>{a, b, c, d};
                    break;
                }
            }

    if (s.parallel_class && s.parallel_class->size() == L) {
        rep.parallel_classes_valid = true;
        const auto& cls = *s.parallel_class;
        std::vector<std::uint32_t> labels(cls.begin(), cls.end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        for (auto label : labels) {
            std::vector<int> hits(P, 0);
            for (std::size_t li = 0; li < L; ++li)
                if (cls[li] == label)
                    for (auto p : s.lines[li]) ++hits[p];
            if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
                rep.parallel_classes_valid = false;
        }
    }
    return rep;
}

std::uint32_t LabeledGraph::line_vertex(std::uint32_t line) const {
    return static_cast<std::uint32_t>(point_count() + line);
}

std::size_t LabeledGraph::point_count() const {
    return static_cast<std::size_t>(std::count(role.begin(), role.end(), Role::point));
}

LabeledGraph incidence_graph(const IncidenceStructure& s) {
    const std::size_t P = s.points;
    std::vector<Edge> edges;
    for (std::size_t li = 0; li < s.lines.size(); ++li)
        for (auto p : s.lines[li]) {
            if (p >= P) throw std::invalid_argument("line refers to a missing point");
            edges.emplace_back(p, static_cast<Vertex>(P + li));
        }
    LabeledGraph lg;
    lg.graph = Graph(P + s.lines.size(), edges);
    lg.role.assign(P, Role::point);
    lg.role.resize(P + s.lines.size(), Role::line);
    for (std::uint32_t i = 0; i < P; ++i) lg.origin.push_back(i);
    for (std::uint32_t i = 0; i < s.lines.size(); ++i) lg.origin.push_back(i);
    lg.line_class.assign(P + s.lines.size(), std::nullopt);
    if (s.parallel_class)
        for (std::size_t li = 0; li < s.lines.size(); ++li) lg.line_class[P + li] = (*s.parallel_class)[li];
    return lg;
}

LabeledGraph truncated_affine_graph(unsigned q, unsigned k) {
    auto lg = incidence_graph(remove_parallel_classes(affine_plane(q), k));
    if (!is_connected(lg.graph))
        throw std::invalid_argument("AG(2," + std::to_string(q) + ") minus " + std::to_string(k) +
                                    " parallel classes has a disconnected incidence graph");
    return lg;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint32_t number(std::string_view tok, std::size_t line_no) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

template <class F>
void for_each_content_line(std::string_view text, F&& f) {
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto toks = tokens(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        if (toks.empty() || toks.front().front() == '#') continue;
        f(toks, line_no);
    }
}

}  // namespace

IncidenceStructure parse_incidence(std::string_view text) {
    IncidenceStructure s;
    bool header = false;
    std::size_t expected = 0;
    bool any_class = false, all_class = true;
    std::vector<std::uint32_t> cls;
    std::size_t last_line = 0;
    for_each_content_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line_no) {
        last_line = line_no;
        if (!header) {
            if (toks.size() != 2) throw ParseError(line_no, "header must be \"P L\"");
            s.points = number(toks[0], line_no);
            expected = number(toks[1], line_no);
            header = true;
            return;
        }
        if (s.lines.size() == expected) throw ParseError(line_no, "more lines than the header declares");
        LineSet pts;
        std::size_t n = toks.size();
        std::optional<std::uint32_t> label;
        if (n >= 2 && toks[n - 2] == "class") {
            label = number(toks[n - 1], line_no);
            n -= 2;
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto p = number(toks[i], line_no);
            if (p >= s.points) throw ParseError(line_no, "point index out of range");
            pts.push_back(p);
        }
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
            throw ParseError(line_no, "point repeated on a line");
        s.lines.push_back(std::move(pts));
        any_class |= label.has_value();
        all_class &= label.has_value();
        cls.push_back(label.value_or(0));
    });
    if (!header) throw ParseError(last_line, "missing header");
    if (s.lines.size() != expected)
        throw ParseError(last_line, "expected " + std::to_string(expected) + " lines, found " +
                                        std::to_string(s.lines.size()));
    if (any_class && !all_class) throw ParseError(last_line, "class labels must be given on every line or none");
    if (any_class) s.parallel_class = std::move(cls);
    return s;
}

std::string serialize_incidence(const IncidenceStructure& s) {
    std::ostringstream out;
    out << s.points << ' ' << s.lines.size() << '\n';
    for (std::size_t li = 0; li < s.lines.size(); ++li) {
        for (std::size_t i = 0; i < s.lines[li].size(); ++i) out << (i ? " " : "") << s.lines[li][i];
        if (s.parallel_class) out << " class " << (*s.parallel_class)[li];
        out << '\n';
    }
    return out.str();
}

std::string serialize_labels(const LabeledGraph& lg) {
    std::ostringstream out;
    out << "# vertex role origin [class c]\n";
    for (std::size_t v = 0; v < lg.role.size(); ++v) {
        out << v << ' ' << (lg.role[v] == Role::point ? "point" : "line") << ' ' << lg.origin[v];
        if (v < lg.line_class.size() && lg.line_class[v]) out << " class " << *lg.line_class[v];
        out << '\n';
    }
    return out.str();
}

LabeledGraph parse_labels(const Graph& g, std::string_view text) {
    LabeledGraph lg;
    lg.graph = g;
    const std::size_t n = g.order();
    lg.role.assign(n, Role::point);
    lg.origin.assign(n, 0);
    lg.line_class.assign(n, std::nullopt);
    std::vector<bool> seen(n, false);
    std::size_t last_line = 0;
    for_each_content_line(text, [&](const std::vector<std::string_view>& toks, std::size_t line_no) {
        last_line = line_no;
        if (toks.size() != 3 && toks.size() != 5)
            throw ParseError(line_no, "expected \"vertex role origin [class c]\"");
        auto v = number(toks[0], line_no);
        if (v >= n) throw ParseError(line_no, "vertex out of range");
        if (seen[v]) throw ParseError(line_no, "vertex labelled twice");
        seen[v] = true;
        if (toks[1] == "point") lg.role[v] = Role::point;
        else if (toks[1] == "line") lg.role[v] = Role::line;
        else throw ParseError(line_no, "role must be 'point' or 'line'");
        lg.origin[v] = number(toks[2], line_no);
        if (toks.size() == 5) {
            if (toks[3] != "class") throw ParseError(line_no, "expected 'class'");
            lg.line_class[v] = number(toks[4], line_no);
        }
    });
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw ParseError(last_line, "every vertex needs a label");
    for (auto [u, v] : g.edges())
        if (lg.role[u] == lg.role[v]) throw std::invalid_argument("labels do not describe a bipartition");
    return lg;
}

}  // namespace copnum
