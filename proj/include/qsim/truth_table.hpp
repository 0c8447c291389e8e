#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsim {

/// Total function f : {0,1}^n_in -> {0,1}^n_out, stored as one output word
/// per input. Inputs and outputs use the same MSB-first bit convention as
/// basis indices.
class TruthTable {
  public:
    TruthTable(std::size_t n_in, std::size_t n_out, std::vector<std::uint64_t> outputs);

    static TruthTable from_function(std::size_t n_in, std::size_t n_out,
                                    const std::function<std::uint64_t(std::uint64_t)>& f);
    static TruthTable constant(std::size_t n_in, std::uint64_t value, std::size_t n_out = 1);

    std::size_t n_in() const noexcept { return n_in_; }
    std::size_t n_out() const noexcept { return n_out_; }
    std::size_t domain_size() const noexcept { return outputs_.size(); }
    std::uint64_t value(std::uint64_t input) const { return outputs_[input]; }

    /// Same output on every input.
    bool is_constant() const;
    /// Single-output f taking each value on exactly half the inputs.
    bool is_balanced() const;

  private:
    std::size_t n_in_;
    std::size_t n_out_;
    std::vector<std::uint64_t> outputs_;
};

/// Text format: one `<input-bits> <output-bits>` row per line, `#` starts a
/// comment, blank lines ignored, rows in any order. Arity is inferred from
/// the first data row; duplicate, inconsistent or missing rows are rejected
/// with the offending line or input named in the error.
TruthTable parse_oracle_text(std::istream& in, const std::string& source_name = "<input>");
TruthTable parse_oracle_file(const std::string& path);
std::string format_oracle(const TruthTable& table);

} // namespace qsim
