#include "scnewton/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace scnewton {

namespace {

using nlohmann::json;

// 1-based line/column of a byte offset, for syntax-error messages.
std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
    throw ProblemParseError("problem file: field '" + field + "': " + why);
}

Eigen::VectorXd get_vector(const json& j, const std::string& field) {
    if (!j.contains(field)) fail_field(field, "missing");
    const json& a = j.at(field);
    if (!a.is_array() || a.empty()) fail_field(field, "expected a nonempty array of numbers");
    Eigen::VectorXd v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number()) fail_field(field, "entry " + std::to_string(i) + " is not a number");
        v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
    }
    return v;
}

Eigen::MatrixXd get_matrix(const json& j, const std::string& field) {
    if (!j.contains(field)) fail_field(field, "missing");
    const json& a = j.at(field);
    if (!a.is_array() || a.empty() || !a[0].is_array()) {
        fail_field(field, "expected a nonempty array of rows (row-major)");
    }
    const std::size_t cols = a[0].size();
    if (cols == 0) fail_field(field, "rows must be nonempty");
    Eigen::MatrixXd M(a.size(), cols);
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (!a[r].is_array() || a[r].size() != cols) {
            fail_field(field, "row " + std::to_string(r) + " has " +
                                  std::to_string(a[r].size()) + " entries, expected " +
                                  std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!a[r][c].is_number()) {
                fail_field(field, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                      ") is not a number");
            }
            M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a[r][c].get<double>();
        }
    }
    return M;
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ProblemParseError("problem file: malformed JSON at line " + std::to_string(line) +
                                ", column " + std::to_string(col));
    }
    if (!j.is_object()) throw ProblemParseError("problem file: top level must be an object");
    if (!j.contains("type") || !j.at("type").is_string()) fail_field("type", "missing or not a string");

    ProblemSpec spec;
    spec.type = j.at("type").get<std::string>();
    try {
        if (spec.type == "log_barrier") {
            spec.oracle = make_log_barrier(get_matrix(j, "A"), get_vector(j, "b"));
        } else if (spec.type == "quadratic") {
            spec.oracle = make_quadratic(get_matrix(j, "Q"), get_vector(j, "q"));
        } else if (spec.type == "extremal_barrier") {
            if (!j.contains("rho") || !j.at("rho").is_number()) fail_field("rho", "missing or not a number");
            spec.oracle = make_extremal_barrier(j.at("rho").get<double>());
        } else {
            fail_field("type", "unknown problem type '" + spec.type + "'");
        }
    } catch (const std::invalid_argument& e) {
        // constructor-level rejections (shape mismatch, asymmetry, bad rho)
        throw ProblemParseError(std::string("problem file: ") + e.what());
    }

    spec.x0 = get_vector(j, "x0");
    if (spec.x0.size() != spec.oracle->dimension()) {
        fail_field("x0", "has " + std::to_string(spec.x0.size()) + " entries but the problem has dimension " +
                             std::to_string(spec.oracle->dimension()));
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProblemParseError("cannot open problem file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace scnewton
