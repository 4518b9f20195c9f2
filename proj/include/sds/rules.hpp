#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sds/common.hpp"

namespace sds {

// Total lookup table for one vertex function f : {0..q-1}^arity -> {0..q-1}.
// Entries are stored in lexicographic input order, first tuple element most
// significant: table[((t1*q + t2)*q + t3)...] = f(t1, t2, t3, ...).
class RuleTable {
 public:
  RuleTable(int arity, int q, std::vector<int> table)
      : arity_(arity), q_(q), table_(std::move(table)) {
    if (arity < 1) throw std::invalid_argument("RuleTable: arity must be >= 1");
    if (q < 1) throw std::invalid_argument("RuleTable: q must be >= 1");
    std::uint64_t expect = checked_pow(static_cast<std::uint64_t>(q), arity);
    if (table_.size() != expect)
      throw std::invalid_argument("RuleTable: table has " + std::to_string(table_.size()) +
                                  " entries, expected q^arity = " + std::to_string(expect));
    for (int out : table_)
      if (out < 0 || out >= q)
        throw std::invalid_argument("RuleTable: output " + std::to_string(out) +
                                    " outside 0.." + std::to_string(q - 1));
  }

  int arity() const { return arity_; }
  int q() const { return q_; }
  const std::vector<int>& table() const { return table_; }

  int eval(std::span<const int> inputs) const {
    std::size_t idx = 0;
    for (int t : inputs) idx = idx * static_cast<std::size_t>(q_) + static_cast<std::size_t>(t);
    return table_[idx];
  }

  bool operator==(const RuleTable&) const = default;

 private:
  int arity_;
  int q_;
  std::vector<int> table_;
};

// Named rules. nor, nand, parity and majority are Boolean (q must be 2);
// zero and one are constants over any state set.
inline RuleTable builtin_rule(const std::string& name, int arity, int q) {
  if (arity < 1) throw std::invalid_argument("builtin_rule: arity must be >= 1");
  bool boolean_only = name == "nor" || name == "nand" || name == "parity" || name == "majority";
  if (boolean_only && q != 2)
    throw std::invalid_argument("builtin_rule: rule '" + name + "' requires q = 2");
  if (q < 1) throw std::invalid_argument("builtin_rule: q must be >= 1");
  if (name == "one" && q < 2)
    throw std::invalid_argument("builtin_rule: rule 'one' requires q >= 2");

  std::uint64_t size = checked_pow(static_cast<std::uint64_t>(q), arity);
  std::vector<int> table(size, 0);
  std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (int i = arity - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    int ones = 0, sum = 0;
    for (int t : tuple) {
      if (t != 0) ++ones;
      sum += t;
    }
    int out;
    if (name == "nor")
      out = ones == 0 ? 1 : 0;
    else if (name == "nand")
      out = ones == arity ? 0 : 1;
    else if (name == "parity")
      out = sum % 2;
    else if (name == "majority")
      out = 2 * ones > arity ? 1 : 0;
    else if (name == "zero")
      out = 0;
    else if (name == "one")
      out = 1;
    else
      throw std::invalid_argument("builtin_rule: unknown rule '" + name + "'");
    table[idx] = out;
  }
  return RuleTable(arity, q, std::move(table));
}

}  // namespace sds
