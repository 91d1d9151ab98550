#include "huckel/bigint.hpp"

#include <mutex>
#include <vector>

#include "huckel/error.hpp"

namespace huckel {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::BadRange: return "BadRange";
    case Errc::StrategyPrecondition: return "StrategyPrecondition";
    case Errc::PivotBreakdown: return "PivotBreakdown";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotRankOne: return "NotRankOne";
    case Errc::BlockMismatch: return "BlockMismatch";
    case Errc::CostGuard: return "CostGuard";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::BadParity: return "BadParity";
    case Errc::Parse: return "Parse";
    case Errc::Usage: return "Usage";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw Error(Errc::NotDivisible, "division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (!r.is_zero()) throw Error(Errc::NotDivisible, a.str() + " / " + b.str());
  return q;
}

BigInt factorial(unsigned k) {
  static std::mutex mu;
  static std::vector<BigInt> cache{BigInt(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[k];
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt isqrt(const BigInt& v) {
  if (v.sign() < 0) throw Error(Errc::BadRange, "isqrt of negative " + v.str());
  if (v < 2) return v;
  // Start above the root so the iteration decreases monotonically.
  BigInt r = BigInt(1) << ((boost::multiprecision::msb(v) / 2) + 1);
  while (true) {
    BigInt next = (r + v / r) >> 1;
    if (next >= r) return r;
    r = next;
  }
}

std::optional<BigInt> exact_sqrt(const BigInt& v) {
  if (v.sign() < 0) return std::nullopt;
  BigInt r = isqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw Error(Errc::Parse, "empty integer");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw Error(Errc::Parse, "bad integer '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw Error(Errc::Parse, "bad integer '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace huckel
