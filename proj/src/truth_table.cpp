#include "qsim/truth_table.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qsim/state.hpp"

namespace qsim {

namespace {

constexpr std::size_t kMaxArity = 16;

void check_arity(std::size_t n_in, std::size_t n_out) {
    if (n_in == 0 || n_out == 0) {
        throw std::invalid_argument("truth table needs at least one input and one output bit");
    }
    if (n_in > kMaxArity || n_out > kMaxArity) {
        throw std::invalid_argument("truth table arity too large");
    }
}

} // namespace

TruthTable::TruthTable(std::size_t n_in, std::size_t n_out, std::vector<std::uint64_t> outputs)
    : n_in_(n_in), n_out_(n_out), outputs_(std::move(outputs)) {
    check_arity(n_in, n_out);
    if (outputs_.size() != (std::size_t{1} << n_in)) {
        throw std::invalid_argument("truth table over " + std::to_string(n_in) +
                                    " input bits needs " +
                                    std::to_string(std::size_t{1} << n_in) + " rows, got " +
                                    std::to_string(outputs_.size()));
    }
    const std::uint64_t limit = std::uint64_t{1} << n_out;
    for (std::uint64_t v : outputs_) {
        if (v >= limit) {
            throw std::invalid_argument("truth table output " + std::to_string(v) +
                                        " does not fit in " + std::to_string(n_out) + " bits");
        }
    }
}

TruthTable TruthTable::from_function(std::size_t n_in, std::size_t n_out,
                                     const std::function<std::uint64_t(std::uint64_t)>& f) {
    check_arity(n_in, n_out);
    std::vector<std::uint64_t> outputs(std::size_t{1} << n_in);
    for (std::size_t x = 0; x < outputs.size(); ++x) outputs[x] = f(x);
    return TruthTable(n_in, n_out, std::move(outputs));
}

TruthTable TruthTable::constant(std::size_t n_in, std::uint64_t value, std::size_t n_out) {
    check_arity(n_in, n_out);
    return TruthTable(n_in, n_out,
                      std::vector<std::uint64_t>(std::size_t{1} << n_in, value));
}

bool TruthTable::is_constant() const {
    for (std::uint64_t v : outputs_) {
        if (v != outputs_.front()) return false;
    }
    return true;
}

bool TruthTable::is_balanced() const {
    if (n_out_ != 1) return false;
    std::size_t ones = 0;
    for (std::uint64_t v : outputs_) ones += static_cast<std::size_t>(v);
    return 2 * ones == outputs_.size();
}

namespace {

struct Row {
    std::string input;
    std::string output;
    std::size_t line;
};

bool all_bits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c != '0' && c != '1') return false;
    }
    return true;
}

} // namespace

TruthTable parse_oracle_text(std::istream& in, const std::string& source_name) {
    std::vector<Row> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string input, output, extra;
        if (!(fields >> input)) continue; // blank or comment-only line
        if (!(fields >> output) || (fields >> extra)) {
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                     ": expected `<input-bits> <output-bits>`");
        }
        if (!all_bits(input) || !all_bits(output)) {
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                     ": rows must be made of 0/1 bits");
        }
        rows.push_back(Row{input, output, line_no});
    }
    if (rows.empty()) {
        throw std::runtime_error(source_name + ": no truth table rows found");
    }

    const std::size_t n_in = rows.front().input.size();
    const std::size_t n_out = rows.front().output.size();
    check_arity(n_in, n_out);
    const std::size_t expected = std::size_t{1} << n_in;

    std::vector<std::optional<std::uint64_t>> outputs(expected);
    for (const Row& row : rows) {
        if (row.input.size() != n_in || row.output.size() != n_out) {
            throw std::runtime_error(source_name + ":" + std::to_string(row.line) +
                                     ": arity differs from first row (" + std::to_string(n_in) +
                                     " -> " + std::to_string(n_out) + " bits)");
        }
        const std::size_t x = bits_to_index(row.input);
        if (outputs[x].has_value()) {
            throw std::runtime_error(source_name + ":" + std::to_string(row.line) +
                                     ": duplicate row for input " + row.input);
        }
        outputs[x] = bits_to_index(row.output);
    }
    for (std::size_t x = 0; x < expected; ++x) {
        if (!outputs[x].has_value()) {
            throw std::runtime_error(source_name + ": incomplete table, missing input " +
                                     index_to_bits(x, n_in));
        }
    }

    std::vector<std::uint64_t> values(expected);
    for (std::size_t x = 0; x < expected; ++x) values[x] = *outputs[x];
    return TruthTable(n_in, n_out, std::move(values));
}

TruthTable parse_oracle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open oracle file " + path);
    return parse_oracle_text(in, path);
}

std::string format_oracle(const TruthTable& table) {
    std::string out;
    for (std::size_t x = 0; x < table.domain_size(); ++x) {
        out += index_to_bits(x, table.n_in());
        out += ' ';
        out += index_to_bits(table.value(x), table.n_out());
        out += '\n';
    }
    return out;
}

} // namespace qsim
