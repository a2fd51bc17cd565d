#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

/// Arithmetic tables for GF(q). Elements are 0..q-1 with 0 and 1 the
/// identities. For q = p^e the element with base-p digits (a_0, ..., a_{e-1})
/// stands for a_0 + a_1 x + ... reduced modulo a fixed irreducible polynomial.
class FiniteField {
public:
    explicit FiniteField(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned inv(unsigned a) const { return inv_[a]; }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

    /// Exhaustive check of the field axioms over the tables.
    bool satisfies_axioms() const;

private:
    unsigned q_, p_, e_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

/// Prime powers whose irreducible polynomial ships with the library.
inline constexpr unsigned kTabulatedPrimePowers[] = {4, 8, 9, 16, 25, 27};

/// Primes are supported up to this bound; fields beyond it are not needed.
inline constexpr unsigned kMaxPrimeOrder = 257;

bool is_prime(unsigned x);
/// Returns (p, e) with q = p^e, or nothing when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);
bool field_supported(unsigned q);

/// Throws std::invalid_argument for non-prime-powers and for prime powers
/// without a tabulated polynomial.
FiniteField finite_field(unsigned q);

using LineSet = std::vector<std::uint32_t>;

struct IncidenceStructure {
    std::size_t points = 0;
    /// Each line is a sorted list of point indices.
    std::vector<LineSet> lines;
    /// Parallel-class label per line, when known.
    std::optional<std::vector<std::uint32_t>> parallel_class;
};

IncidenceStructure projective_plane(unsigned q);
IncidenceStructure affine_plane(unsigned q);

/// Deletes the k parallel classes with the largest labels (1 <= k <= q).
/// Surviving lines keep their original labels.
IncidenceStructure remove_parallel_classes(const IncidenceStructure& a, unsigned k);

struct PointPair {
    std::uint32_t a = 0, b = 0;
};

struct StructureReport {
    bool partial_linear = true;       // two points share at most one line
    std::optional<PointPair> partial_linear_violation;  // two lines sharing these points
    std::optional<PointPair> shared_by_lines;           // the two offending lines
    bool unique_line_per_points = true;                 // projective axiom 1
    std::optional<PointPair> points_without_line;
    bool unique_point_per_lines = true;                 // projective axiom 2
    std::optional<PointPair> lines_without_point;
    bool four_points_in_general_position = false;       // projective axiom 3
    std::optional<std::vector<std::uint32_t>> general_quadrangle;
    bool parallel_classes_valid = false;  // labels present, each class partitions the points
    bool is_projective() const {
        return partial_linear && unique_line_per_points && unique_point_per_lines &&
               four_points_in_general_position;
    }
    bool is_affine() const {
        return partial_linear && unique_line_per_points && parallel_classes_valid;
    }
};

StructureReport validate_structure(const IncidenceStructure& s);

enum class Role : std::uint8_t { point, line };

struct LabeledGraph {
    Graph graph;
    std::vector<Role> role;
    /// Point or line index in the source structure.
    std::vector<std::uint32_t> origin;
    /// Parallel-class label for line vertices; empty when unknown.
    std::vector<std::optional<std::uint32_t>> line_class;

    std::uint32_t point_vertex(std::uint32_t point) const { return point; }
    std::uint32_t line_vertex(std::uint32_t line) const;
    std::size_t point_count() const;
};

/// Points become vertices 0..P-1 and lines follow in order.
LabeledGraph incidence_graph(const IncidenceStructure& s);

/// Incidence graph of AG(2,q) with k parallel classes deleted. Throws when
/// the result is disconnected.
LabeledGraph truncated_affine_graph(unsigned q, unsigned k);

IncidenceStructure parse_incidence(std::string_view text);
std::string serialize_incidence(const IncidenceStructure& s);

/// Side table: one "vertex role origin [class c]" line per vertex.
std::string serialize_labels(const LabeledGraph& lg);
/// Rebuilds a LabeledGraph from a graph and its side table.
LabeledGraph parse_labels(const Graph& g, std::string_view text);

}  // namespace copnum
