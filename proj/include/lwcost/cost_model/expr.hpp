#pragma once
#include "cost_params.hpp"
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lwcost {

// Symbolic cost expression. Parameters carry a binding name (a CostParams
// field or one of len_A, len_M, blocks_A, blocks_M) and the symbol shown when
// rendering, so one binding can be written l_A in one row and ℓ_A in another.
struct CostExpr
{
  enum class Kind
  {
    Constant,
    Parameter,
    Sum,
    Product,
    CeilDiv,
    Quotient, // exact rational division, for rows written without ceilings
  };

  Kind kind = Kind::Constant;
  Cost value{ 0 };
  std::string name;
  std::string symbol;
  std::vector<CostExpr> children;

  friend bool operator==(const CostExpr&, const CostExpr&) = default;
};

struct UnboundParameter : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct ExprParseError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

namespace expr {

inline CostExpr
constant(Cost v)
{
  CostExpr e;
  e.kind = CostExpr::Kind::Constant;
  e.value = v;
  return e;
}

inline CostExpr
param(std::string name, std::string symbol)
{
  CostExpr e;
  e.kind = CostExpr::Kind::Parameter;
  e.name = std::move(name);
  e.symbol = std::move(symbol);
  return e;
}

// CostParams field rendered under its own name.
inline CostExpr
param(std::string name)
{
  std::string sym = name;
  return param(std::move(name), std::move(sym));
}

inline CostExpr
sum(std::vector<CostExpr> terms)
{
  CostExpr e;
  e.kind = CostExpr::Kind::Sum;
  e.children = std::move(terms);
  return e;
}

inline CostExpr
product(std::vector<CostExpr> factors)
{
  CostExpr e;
  e.kind = CostExpr::Kind::Product;
  e.children = std::move(factors);
  return e;
}

inline CostExpr
ceil_div(CostExpr num, CostExpr den)
{
  CostExpr e;
  e.kind = CostExpr::Kind::CeilDiv;
  e.children = { std::move(num), std::move(den) };
  return e;
}

inline CostExpr
quotient(CostExpr num, CostExpr den)
{
  CostExpr e;
  e.kind = CostExpr::Kind::Quotient;
  e.children = { std::move(num), std::move(den) };
  return e;
}

// Length symbols and the binding each one reads.
inline const std::map<std::string, std::string>&
length_symbols()
{
  static const std::map<std::string, std::string> table{
    { "|A|", "len_A" },     { "|AD|", "len_A" },    { "|M|", "len_M" },
    { "|P|", "len_M" },     { "l_A", "blocks_A" },  { "l_P", "blocks_M" },
    { "ℓ_A", "blocks_A" },  { "ℓ_M", "blocks_M" },  { "a", "blocks_A" },
    { "m", "blocks_M" },    { "len_A", "len_A" },   { "len_M", "len_M" },
    { "blocks_A", "blocks_A" }, { "blocks_M", "blocks_M" },
  };
  return table;
}

}

using Bindings = std::map<std::string, Cost>;

inline Cost
eval_expr(const CostExpr& e, const Bindings& bindings)
{
  using K = CostExpr::Kind;
  switch (e.kind) {
    case K::Constant:
      return e.value;
    case K::Parameter: {
      auto it = bindings.find(e.name);
      if (it == bindings.end())
        throw UnboundParameter("unbound parameter '" + e.symbol + "' (" +
                               e.name + ")");
      return it->second;
    }
    case K::Sum: {
      Cost acc{ 0 };
      for (const auto& c : e.children)
        acc += eval_expr(c, bindings);
      return acc;
    }
    case K::Product: {
      Cost acc{ 1 };
      for (const auto& c : e.children)
        acc *= eval_expr(c, bindings);
      return acc;
    }
    case K::CeilDiv:
    case K::Quotient: {
      const Cost num = eval_expr(e.children.at(0), bindings);
      const Cost den = eval_expr(e.children.at(1), bindings);
      if (den == Cost(0))
        throw std::domain_error("zero denominator in cost expression");
      return e.kind == K::CeilDiv ? ceil_div(num, den) : num / den;
    }
  }
  throw std::logic_error("bad expression node");
}

namespace detail {

inline bool
is_atom(const CostExpr& e)
{
  return e.kind == CostExpr::Kind::Constant ||
         e.kind == CostExpr::Kind::Parameter ||
         e.kind == CostExpr::Kind::CeilDiv;
}

}

inline std::string
render_expr(const CostExpr& e)
{
  using K = CostExpr::Kind;
  auto wrap = [](const CostExpr& c, bool need) {
    std::string s = render_expr(c);
    return need ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case K::Constant:
      return to_string(e.value);
    case K::Parameter:
      return e.symbol;
    case K::Sum: {
      if (e.children.empty())
        return "0";
      std::string out;
      for (size_t i = 0; i < e.children.size(); i++) {
        if (i)
          out += " + ";
        out += wrap(e.children[i], e.children[i].kind == K::Sum);
      }
      return out;
    }
    case K::Product: {
      if (e.children.empty())
        return "1";
      std::string out;
      for (size_t i = 0; i < e.children.size(); i++) {
        if (i)
          out += "·";
        out += wrap(e.children[i], e.children[i].kind == K::Sum);
      }
      return out;
    }
    case K::CeilDiv:
      return "⌈" + wrap(e.children[0], !detail::is_atom(e.children[0])) + "/" +
             wrap(e.children[1], !detail::is_atom(e.children[1])) + "⌉";
    case K::Quotient:
      return wrap(e.children[0], !detail::is_atom(e.children[0])) + "/" +
             wrap(e.children[1], !detail::is_atom(e.children[1]));
  }
  throw std::logic_error("bad expression node");
}

// Parameter names referenced by an expression, in first-use order.
inline void
collect_parameters(const CostExpr& e,
                   std::vector<std::pair<std::string, std::string>>& out)
{
  if (e.kind == CostExpr::Kind::Parameter) {
    for (const auto& p : out)
      if (p.first == e.symbol)
        return;
    out.emplace_back(e.symbol, e.name);
  }
  for (const auto& c : e.children)
    collect_parameters(c, out);
}

namespace detail {

// Recursive-descent parser for the rendered form:
//   sum     := product (" + " product)*
//   product := unary ("·" unary)*
//   unary   := atom ("/" atom)?
//   atom    := number | symbol | "⌈" atom "/" atom "⌉" | "(" sum ")"
class ExprParser
{
public:
  explicit ExprParser(std::string_view text)
    : s_(text)
  {
  }

  CostExpr parse()
  {
    CostExpr e = parse_sum();
    skip_ws();
    if (pos_ != s_.size())
      fail("unexpected trailing input");
    return e;
  }

private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const
  {
    throw ExprParseError(why + " at offset " + std::to_string(pos_) +
                         " in '" + std::string(s_) + "'");
  }

  void skip_ws()
  {
    while (pos_ < s_.size() && s_[pos_] == ' ')
      pos_++;
  }

  bool take(std::string_view tok)
  {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  CostExpr parse_sum()
  {
    std::vector<CostExpr> terms{ parse_product() };
    while (take("+"))
      terms.push_back(parse_product());
    return terms.size() == 1 ? terms[0] : expr::sum(std::move(terms));
  }

  CostExpr parse_product()
  {
    std::vector<CostExpr> factors{ parse_unary() };
    while (take("·"))
      factors.push_back(parse_unary());
    return factors.size() == 1 ? factors[0] : expr::product(std::move(factors));
  }

  CostExpr parse_unary()
  {
    CostExpr lhs = parse_atom();
    if (take("/"))
      return expr::quotient(std::move(lhs), parse_atom());
    return lhs;
  }

  CostExpr parse_atom()
  {
    skip_ws();
    if (take("(")) {
      CostExpr e = parse_sum();
      if (!take(")"))
        fail("expected ')'");
      return e;
    }
    if (take("⌈")) {
      CostExpr num = parse_atom();
      if (!take("/"))
        fail("expected '/' inside ceiling");
      CostExpr den = parse_atom();
      if (!take("⌉"))
        fail("expected '⌉'");
      return expr::ceil_div(std::move(num), std::move(den));
    }
    if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      int64_t v = 0;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9')
        v = v * 10 + (s_[pos_++] - '0');
      return expr::constant(Cost(v));
    }
    // Longest symbol match among length symbols and CostParams fields.
    std::string best, best_name;
    for (const auto& [sym, name] : expr::length_symbols())
      if (s_.substr(pos_, sym.size()) == sym && sym.size() > best.size()) {
        best = sym;
        best_name = name;
      }
    for (const auto& [field, v] : CostParams{}.as_bindings())
      if (s_.substr(pos_, field.size()) == field && field.size() > best.size()) {
        best = field;
        best_name = field;
      }
    if (best.empty())
      fail("unknown symbol");
    pos_ += best.size();
    return expr::param(best_name, best);
  }
};

}

inline CostExpr
parse_expr(std::string_view text)
{
  return detail::ExprParser(text).parse();
}

}
