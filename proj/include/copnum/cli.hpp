#pragma once

#include <iosfwd>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "copnum/geometry.hpp"
#include "copnum/graph.hpp"

namespace copnum::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseError = 2,
    kPreconditionError = 3,
    kBudgetError = 4,
    kVerifyFail = 5,
    kIllegalMove = 6,
};

/// Flat "key: value" report with optional sweep records.
class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    template <class T>
    void add(std::string key, T value) requires std::is_arithmetic_v<T> {
        add(std::move(key), number(value));
    }
    void record(std::vector<std::pair<std::string, std::string>> fields);

    void print(std::ostream& out, bool json, const std::string& prefix = "") const;

    static std::string number(double v);
    template <class T>
    static std::string number(T v) requires std::is_integral_v<T> { return std::to_string(v); }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<std::vector<std::pair<std::string, std::string>>> records_;
};

struct LoadedGraph {
    Graph graph;
    std::optional<LabeledGraph> labels;
    std::string source;
};

/// Reads an edge-list file, or builds a named graph when no such file
/// exists: petersen, heawood, complete-N, path-N, cycle-N, star-N, grid-A-B,
/// pN, cN, kN,
/// pg-Q, ag-Q, ag-trunc-Q-K, witness-N. A trailing ".edges" is ignored for
/// names.
LoadedGraph load_graph(const std::string& spec);
std::optional<LoadedGraph> builtin_graph(const std::string& name);

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copnum::cli
