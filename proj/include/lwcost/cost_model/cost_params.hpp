#pragma once
#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace lwcost {

// Exact non-negative rational cost unit. One unit is one primitive call at
// b = 1.
using Cost = boost::rational<int64_t>;

inline std::string
to_string(const Cost& c)
{
  if (c.denominator() == 1)
    return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

inline double
to_double(const Cost& c)
{
  return boost::rational_cast<double>(c);
}

inline Cost
ceil_div(const Cost& num, const Cost& den)
{
  const Cost q = num / den;
  int64_t n = q.numerator(), d = q.denominator();
  int64_t fl = n / d;
  if (n % d != 0 && n > 0)
    fl += 1;
  return Cost(fl);
}

struct CostParams
{
  Cost b{ 1 };      // one permutation call
  Cost P{ 1 };      // one Elephant permutation call
  Cost r{ 1 };      // rate, bytes
  Cost r_in{ 1 };   // absorb rate, bytes
  Cost r_out{ 1 };  // squeeze rate, bytes
  Cost n{ 1 };      // block size, bytes
  Cost d{ 0 };      // digest length, bytes
  Cost b_640{ 1 };  // one P_640 call
  Cost b_1024{ 1 }; // one P_1024 call
  Cost c_k{ 0 };
  Cost c_n{ 0 };
  Cost c_A{ 0 };
  Cost c_M{ 0 };
  Cost c_f{ 0 };

  // Field name -> value, keyed by the names used in expression bindings.
  std::map<std::string, Cost> as_bindings() const
  {
    return { { "b", b },         { "P", P },         { "r", r },
             { "r_in", r_in },   { "r_out", r_out }, { "n", n },
             { "d", d },         { "b_640", b_640 }, { "b_1024", b_1024 },
             { "c_k", c_k },     { "c_n", c_n },     { "c_A", c_A },
             { "c_M", c_M },     { "c_f", c_f } };
  }
};

inline bool
is_cost_param(const std::string& name)
{
  static const CostParams probe;
  return probe.as_bindings().count(name) != 0;
}

// Costs must be >= 0; rates and sizes must be >= 1.
inline void
validate(const CostParams& p)
{
  for (const auto& [name, v] : p.as_bindings()) {
    const bool is_size = name == "r" || name == "r_in" || name == "r_out" ||
                         name == "n";
    if (is_size && v < Cost(1))
      throw std::invalid_argument("cost parameter " + name + " must be >= 1");
    if (v < Cost(0))
      throw std::invalid_argument("cost parameter " + name + " must be >= 0");
  }
}

}
