#include "bentmax/boolfun.hpp"

#include <stdexcept>

#include "bentmax/weights.hpp"

namespace bentmax {

bool WalshSpectrum::is_bent() const {
  if (n % 2 != 0) return false;
  const std::int64_t target = std::int64_t{1} << (n / 2);
  for (std::int64_t v : values)
    if (v != target && v != -target) return false;
  return true;
}

BoolFun monomial(const Field& field, Elem alpha, std::int64_t d) {
  const std::uint32_t ord = field.order();
  // d = 2^n - 1 is allowed: x^(2^n-1) is the indicator of nonzero x.
  if (d <= 0 || d > ord) throw std::invalid_argument("monomial: d out of range (0, 2^n-1]");
  BoolFun f{field.degree(), std::vector<std::uint8_t>(field.size(), 0)};
  if (alpha == 0) return f;
  // In log space: Tr(alpha * x^d) = Tr(g^(la + d*i)) for x = g^i.
  const auto tr = field.trace_exp_table();
  const auto exp = field.exp_table();
  const std::uint64_t la = field.log(alpha);
  std::uint64_t di = 0;
  const std::uint64_t dd = static_cast<std::uint64_t>(d);
  for (std::uint32_t i = 0; i < ord; ++i) {
    std::uint64_t idx = la + di;
    if (idx >= ord) idx -= ord;
    f.table[exp[i]] = tr[idx];
    di += dd;
    if (di >= ord) di -= ord;
  }
  return f;
}

void fwht_inplace(std::vector<std::int64_t>& a) {
  const std::size_t sz = a.size();
  for (std::size_t len = 1; len < sz; len <<= 1) {
    for (std::size_t i = 0; i < sz; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
}

WalshSpectrum walsh(const Field& field, const BoolFun& f) {
  if (f.n != field.degree() || f.table.size() != field.size())
    throw std::invalid_argument("walsh: function does not match field");
  std::vector<std::int64_t> buf(f.table.size());
  for (std::size_t x = 0; x < buf.size(); ++x) buf[x] = f.table[x] ? -1 : 1;
  fwht_inplace(buf);
  WalshSpectrum w{f.n, std::vector<std::int64_t>(buf.size())};
  const auto relabel = field.linear_form_table();
  for (std::size_t lam = 0; lam < buf.size(); ++lam) w.values[lam] = buf[relabel[lam]];
  return w;
}

bool is_bent(const Field& field, const BoolFun& f) { return walsh(field, f).is_bent(); }

BoolFun dual(const Field& field, const BoolFun& f) {
  if (f.n % 2 != 0) throw std::domain_error("dual: defined only for even n");
  const WalshSpectrum w = walsh(field, f);
  if (!w.is_bent()) throw std::domain_error("dual: function is not bent");
  const std::int64_t target = std::int64_t{1} << (f.n / 2);
  BoolFun d{f.n, std::vector<std::uint8_t>(f.table.size(), 0)};
  for (std::size_t lam = 0; lam < f.table.size(); ++lam)
    d.table[lam] = w.values[lam] == target ? 0 : 1;
  return d;
}

std::string to_hex(const BoolFun& f) {
  static const char digits[] = "0123456789abcdef";
  const std::size_t ndigits = (f.table.size() + 3) / 4;
  std::string out(ndigits, '0');
  for (std::size_t t = 0; t < ndigits; ++t) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t x = 4 * t + b;
      if (x < f.table.size() && f.table[x]) v |= 1 << b;
    }
    out[t] = digits[v];
  }
  return out;
}

BoolFun boolfun_from_hex(int n, std::string_view hex) {
  if (n < 1 || n > Field::max_degree) throw std::invalid_argument("boolfun_from_hex: bad degree");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t ndigits = (size + 3) / 4;
  if (hex.size() != ndigits)
    throw std::invalid_argument("boolfun_from_hex: expected " + std::to_string(ndigits) +
                                " hex digits");
  BoolFun f{n, std::vector<std::uint8_t>(size, 0)};
  for (std::size_t t = 0; t < ndigits; ++t) {
    const char c = hex[t];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::invalid_argument("boolfun_from_hex: invalid digit");
    for (int b = 0; b < 4 && 4 * t + b < size; ++b) f.table[4 * t + b] = (v >> b) & 1;
  }
  return f;
}

TraceRepr trace_repr(const Field& field, const BoolFun& f) {
  if (f.n != field.degree()) throw std::invalid_argument("trace_repr: degree mismatch");
  const std::uint32_t ord = field.order();
  // A_j = sum over f's support of x^(-j), a multiplicative-group Fourier
  // coefficient; Boolean-valued f forces A_{2j} = A_j^2, one coefficient per
  // cyclotomic coset.
  std::vector<std::uint32_t> support_logs;
  for (std::uint32_t i = 0; i < ord; ++i)
    if (f.table[field.exp(i)]) support_logs.push_back(i);

  TraceRepr repr;
  repr.n = f.n;
  int parity = static_cast<int>(support_logs.size() & 1);  // A_0 in F_2
  if (f.table[0]) repr.terms.push_back({0, 1, 1});
  repr.tail_bit = parity ^ static_cast<int>(f.table[0]);

  for (const auto& coset : cyclotomic_cosets(f.n)) {
    const std::uint32_t j = coset.leader;
    if (j == 0) continue;
    Elem acc = 0;
    for (std::uint32_t i : support_logs) {
      const std::uint64_t e = (static_cast<std::uint64_t>(ord - j) * i) % ord;  // x^(-j)
      acc ^= field.exp(static_cast<std::uint32_t>(e));
    }
    if (acc != 0)
      repr.terms.push_back({j, acc, static_cast<int>(coset.members.size())});
  }
  return repr;
}

BoolFun rebuild(const Field& field, const TraceRepr& repr) {
  if (repr.n != field.degree()) throw std::invalid_argument("rebuild: degree mismatch");
  BoolFun f{repr.n, std::vector<std::uint8_t>(field.size(), 0)};
  for (std::uint32_t x = 0; x < field.size(); ++x) {
    Elem acc = 0;
    for (const auto& term : repr.terms) {
      if (term.leader == 0) {
        acc ^= term.coeff;
        continue;
      }
      if (x == 0) continue;
      // Tr over F_{2^{n_j}} of F_j x^j: the value lies in that subfield.
      Elem y = field.mul(term.coeff, field.pow(x, term.leader));
      Elem sub = 0;
      for (int i = 0; i < term.coset_size; ++i) {
        sub ^= y;
        y = field.mul(y, y);
      }
      acc ^= sub;
    }
    if (x != 0 && repr.tail_bit) acc ^= 1;
    f.table[x] = static_cast<std::uint8_t>(acc & 1);
  }
  return f;
}

VectorialFun power_map(const Field& field, std::int64_t d) {
  if (d <= 0 || d >= field.order())
    throw std::invalid_argument("power_map: d out of range (0, 2^n-1)");
  VectorialFun v{field.degree(), VectorialFun::Kind::power, d,
                 std::vector<Elem>(field.size(), 0)};
  for (std::uint32_t x = 1; x < field.size(); ++x) v.table[x] = field.pow(x, d);
  return v;
}

VectorialFun pott_binomial(const Field& field, int i) {
  const int n = field.degree();
  if (n % 2 != 0) throw std::invalid_argument("pott_binomial: n must be even");
  if (i < 0 || i > 62) throw std::invalid_argument("pott_binomial: i out of range [0, 62]");
  const int k = n / 2;
  const std::uint32_t ord = field.order();
  // 2^i mod (2^n - 1) is never 0 since the order is odd.
  const auto e_i = static_cast<std::int64_t>((static_cast<unsigned __int128>(1) << i) % ord);
  VectorialFun v{n, VectorialFun::Kind::pott_binomial, i, std::vector<Elem>(field.size(), 0)};
  for (std::uint32_t x = 1; x < field.size(); ++x) {
    const Elem lin = Field::add(x, field.pow(x, std::int64_t{1} << k));
    v.table[x] = field.mul(field.pow(x, e_i), lin);
  }
  return v;
}

}  // namespace bentmax
