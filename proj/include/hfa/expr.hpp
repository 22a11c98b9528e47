#pragma once

#include "hfa/binding.hpp"
#include "hfa/hfs.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hfa {

/// Expression over named hesitant fuzzy sets.
///
///   expr    := inter { ('∪' | '|') inter }
///   inter   := unary { ('∩' | '&') unary }
///   unary   := '~' unary | postfix
///   postfix := primary { 'ᶜ' | '\'' | '^c' }
///   primary := '(' expr ')' | ('⋃' | '⋂') NAME | ('union' | 'inter') '(' NAME ')' | NAME
///
/// ∩ binds tighter than ∪; both associate to the left. ⋃F / ⋂F fold a family
/// in member order.
class Expr {
 public:
  /// Throws InvalidArgument with the offending column on a syntax error.
  static Expr parse(std::string_view text);

  /// Throws InvalidArgument for unbound names, UniverseMismatch when operands
  /// disagree.
  Hfs eval(const Binding& binding) const;

  /// Canonical rendering with Unicode operators and minimal parentheses.
  std::string to_string() const;

  /// Set names and family names referenced, in first-use order.
  std::vector<std::string> set_names() const;
  std::vector<std::string> family_names() const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace hfa
