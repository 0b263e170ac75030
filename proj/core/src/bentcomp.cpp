#include "bentmax/bentcomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bentmax/kloosterman.hpp"
#include "bentmax/parallel.hpp"
#include "bentmax/weights.hpp"

namespace bentmax {

namespace {

void require_even(const Field& field, const char* who) {
  if (field.degree() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": field degree must be even");
}

// log of F(x) per input x, -1 where F(x) = 0.
std::vector<std::int32_t> component_logs(const Field& field, const std::vector<Elem>& ftab) {
  std::vector<std::int32_t> flog(ftab.size(), -1);
  for (std::size_t x = 0; x < ftab.size(); ++x)
    if (ftab[x] != 0) flog[x] = static_cast<std::int32_t>(field.log(ftab[x]));
  return flog;
}

// W(0) of every component at once: the transform of the value-multiplicity
// vector of F evaluated at the trace form of alpha.  |W(0)| != 2^k rejects
// alpha without touching the full spectrum.
std::vector<std::int64_t> component_w0(const Field& field, const std::vector<Elem>& ftab) {
  std::vector<std::int64_t> mult(field.size(), 0);
  for (Elem y : ftab) ++mult[y];
  fwht_inplace(mult);
  std::vector<std::int64_t> w0(field.size());
  const auto relabel = field.linear_form_table();
  for (std::uint32_t a = 0; a < field.size(); ++a) w0[a] = mult[relabel[a]];
  return w0;
}

bool component_bent(const Field& field, const std::vector<std::int32_t>& flog, Elem alpha,
                    std::vector<std::int64_t>& buf) {
  const std::uint32_t ord = field.order();
  const auto tr = field.trace_exp_table();
  const std::int64_t target = std::int64_t{1} << (field.degree() / 2);
  buf.assign(field.size(), 1);
  const std::uint32_t la = field.log(alpha);
  for (std::size_t x = 0; x < flog.size(); ++x) {
    if (flog[x] < 0) continue;
    std::uint32_t idx = la + static_cast<std::uint32_t>(flog[x]);
    if (idx >= ord) idx -= ord;
    if (tr[idx]) buf[x] = -1;
  }
  fwht_inplace(buf);
  for (std::int64_t v : buf)
    if (v != target && v != -target) return false;
  return true;
}

std::vector<std::uint8_t> bent_flags(const Field& field, const std::vector<Elem>& ftab,
                                     int threads) {
  const std::int64_t target = std::int64_t{1} << (field.degree() / 2);
  const auto flog = component_logs(field, ftab);
  const auto w0 = component_w0(field, ftab);
  std::vector<std::uint8_t> flags(field.size(), 0);
  parallel_for(field.size(), threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int64_t> buf;
    for (std::size_t a = lo; a < hi; ++a) {
      if (a == 0) continue;
      if (w0[a] != target && w0[a] != -target) continue;
      if (component_bent(field, flog, static_cast<Elem>(a), buf)) flags[a] = 1;
    }
  });
  return flags;
}

BentComponentReport report_from_flags(const Field& field, const VectorialFun& fun,
                                      const std::vector<std::uint8_t>& flags) {
  BentComponentReport r;
  r.n = field.degree();
  r.k = r.n / 2;
  r.kind = fun.kind;
  r.param = fun.param;
  r.modulus = field.modulus();
  for (std::uint32_t a = 0; a < field.size(); ++a)
    if (!flags[a]) r.s_f.push_back(a);
  r.bent_count = field.size() - r.s_f.size();

  const std::uint64_t subsize = std::uint64_t{1} << r.k;
  r.is_maximal = r.bent_count == field.size() - subsize;

  r.is_linear = std::has_single_bit(static_cast<std::uint64_t>(r.s_f.size())) && !flags[0];
  if (r.is_linear) {
    for (std::size_t i = 0; i < r.s_f.size() && r.is_linear; ++i)
      for (std::size_t j = i + 1; j < r.s_f.size(); ++j)
        if (flags[r.s_f[i] ^ r.s_f[j]]) {
          r.is_linear = false;
          break;
        }
  }

  if (r.s_f.size() == subsize) {
    const auto sub = field.subfield(r.k);
    r.is_subfield_k = std::equal(sub.begin(), sub.end(), r.s_f.begin(), r.s_f.end());
  }
  return r;
}

}  // namespace

BentComponentReport bent_components(const Field& field, const VectorialFun& fun, int threads) {
  require_even(field, "bent_components");
  if (fun.n != field.degree() || fun.table.size() != field.size())
    throw std::invalid_argument("bent_components: function does not match field");
  return report_from_flags(field, fun, bent_flags(field, fun.table, threads));
}

std::vector<std::string> verify_structure(const Field& field, const BentComponentReport& report) {
  if (report.n != field.degree() || report.modulus != field.modulus())
    throw std::invalid_argument("verify_structure: report does not match field");
  std::vector<std::string> violated;
  std::vector<std::uint8_t> member(field.size(), 0);
  for (Elem a : report.s_f) member[a] = 1;

  if (report.s_f.empty() || !member[0]) violated.emplace_back("zero-in-nonbent-set");
  const std::uint64_t subsize = std::uint64_t{1} << report.k;
  if (report.s_f.size() < subsize) violated.emplace_back("nonbent-set-min-size");

  for (Elem a : report.s_f)
    if (!member[field.mul(a, a)]) {
      violated.emplace_back("nonbent-set-squaring-closure");
      break;
    }

  if (report.s_f.size() == subsize) {
    bool linear = member[0] != 0;
    for (std::size_t i = 0; i < report.s_f.size() && linear; ++i)
      for (std::size_t j = i + 1; j < report.s_f.size(); ++j)
        if (!member[report.s_f[i] ^ report.s_f[j]]) {
          linear = false;
          break;
        }
    if (!linear) violated.emplace_back("linear-space-at-min-size");
    if (report.kind == VectorialFun::Kind::power) {
      const auto sub = field.subfield(report.k);
      if (!std::equal(sub.begin(), sub.end(), report.s_f.begin(), report.s_f.end()))
        violated.emplace_back("subfield-at-min-size");
    }
  }
  return violated;
}

namespace {

std::vector<std::uint32_t> sweep_exponents(const Field& field, bool coset_reduce) {
  std::vector<std::uint32_t> ds;
  if (coset_reduce) {
    for (const auto& coset : cyclotomic_cosets(field.degree()))
      if (coset.leader != 0) ds.push_back(coset.leader);
  } else {
    for (std::uint32_t d = 1; d < field.order(); ++d) ds.push_back(d);
  }
  return ds;
}

}  // namespace

std::vector<BentComponentReport> monomial_sweep(const Field& field, int threads,
                                                bool coset_reduce) {
  require_even(field, "monomial_sweep");
  const auto ds = sweep_exponents(field, coset_reduce);
  std::vector<BentComponentReport> reports(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const VectorialFun fun = power_map(field, ds[i]);
      reports[i] = report_from_flags(field, fun, bent_flags(field, fun.table, 1));
    }
  });
  return reports;
}

std::vector<std::uint32_t> open_problem_scan(const Field& field, int threads,
                                             bool coset_reduce) {
  require_even(field, "open_problem_scan");
  if (field.degree() > 14)
    throw std::invalid_argument(
        "open_problem_scan: full sweep capped at n = 14; use a smaller field or the "
        "coset-reduced mode");
  const std::uint64_t subsize = std::uint64_t{1} << (field.degree() / 2);
  const std::int64_t target = static_cast<std::int64_t>(subsize);
  const auto ds = sweep_exponents(field, coset_reduce);

  std::vector<std::uint8_t> maximal(ds.size(), 0);
  parallel_for(ds.size(), threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int64_t> buf;
    for (std::size_t i = lo; i < hi; ++i) {
      const VectorialFun fun = power_map(field, ds[i]);
      const auto flog = component_logs(field, fun.table);
      const auto w0 = component_w0(field, fun.table);
      // alpha = 0 is never bent; count it up front and stop as soon as the
      // non-bent count exceeds 2^k.
      std::uint64_t nonbent = 1;
      for (std::uint32_t a = 1; a < field.size() && nonbent <= subsize; ++a) {
        if (w0[a] != target && w0[a] != -target) {
          ++nonbent;
          continue;
        }
        if (!component_bent(field, flog, a, buf)) ++nonbent;
      }
      maximal[i] = nonbent == subsize;
    }
  });

  std::vector<std::uint32_t> out;
  const std::uint32_t ord = field.order();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!maximal[i]) continue;
    if (coset_reduce) {
      std::uint32_t v = ds[i];
      do {
        out.push_back(v);
        v = static_cast<std::uint32_t>((std::uint64_t{v} * 2) % ord);
      } while (v != ds[i]);
    } else {
      out.push_back(ds[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> bent_exponents(const Field& field, int threads, bool coset_reduce) {
  require_even(field, "bent_exponents");
  const std::int64_t target = std::int64_t{1} << (field.degree() / 2);
  const auto ds = sweep_exponents(field, coset_reduce);
  std::vector<std::uint8_t> admits(ds.size(), 0);
  parallel_for(ds.size(), threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<std::int64_t> buf;
    for (std::size_t i = lo; i < hi; ++i) {
      const VectorialFun fun = power_map(field, ds[i]);
      const auto flog = component_logs(field, fun.table);
      const auto w0 = component_w0(field, fun.table);
      for (std::uint32_t a = 1; a < field.size(); ++a) {
        if (w0[a] != target && w0[a] != -target) continue;
        if (component_bent(field, flog, a, buf)) {
          admits[i] = 1;
          break;
        }
      }
    }
  });
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (admits[i]) out.push_back(ds[i]);
  return out;
}

std::vector<Elem> bent_alphas(const Field& field, std::int64_t d) {
  require_even(field, "bent_alphas");
  const VectorialFun fun = power_map(field, d);
  const auto flags = bent_flags(field, fun.table, 1);
  std::vector<Elem> out;
  for (std::uint32_t a = 0; a < field.size(); ++a)
    if (flags[a]) out.push_back(a);
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::gold: return "gold";
    case Family::dillon: return "dillon";
    case Family::kasami: return "kasami";
    case Family::leander: return "leander";
    case Family::cck: return "cck";
  }
  return "?";
}

bool family_predicate(const Field& field, Family family, std::int64_t d, Elem alpha) {
  require_even(field, "family_predicate");
  const int n = field.degree();
  const int k = n / 2;
  const std::uint32_t ord = field.order();
  if (d <= 0 || d >= ord || alpha == 0) return false;

  switch (family) {
    case Family::gold: {
      const std::uint64_t tp = static_cast<std::uint64_t>(d) - 1;
      if (!std::has_single_bit(tp)) return false;
      const int t = std::countr_zero(tp);
      if (t < 1) return false;
      if ((n / std::gcd(n, t)) % 2 != 0) return false;
      return !field.is_dth_power(alpha, d);
    }
    case Family::dillon: {
      const std::uint32_t base = (std::uint32_t{1} << k) - 1;
      if (d % base != 0) return false;
      const std::uint32_t r = static_cast<std::uint32_t>(d / base);
      if (std::gcd(r, (std::uint32_t{1} << k) + 1) != 1) return false;
      if (field.pow(alpha, std::int64_t{1} << k) != alpha) return false;
      return kloosterman_sum_embedded(field, k, alpha) == -1;
    }
    case Family::kasami: {
      for (int t = 1; 2 * t <= n; ++t) {
        const std::int64_t dt =
            (std::int64_t{1} << (2 * t)) - (std::int64_t{1} << t) + 1;
        if (dt > d) break;
        if (dt != d) continue;
        if (std::gcd(t, n) != 1) return false;
        return !field.is_dth_power(alpha, 3);
      }
      return false;
    }
    case Family::leander: {
      if (n % 4 != 0) return false;
      const int t = n / 4;
      if (t % 2 == 0) return false;
      const std::int64_t want = ((std::int64_t{1} << t) + 1) * ((std::int64_t{1} << t) + 1);
      if (d != want) return false;
      // alpha in gamma * F_{2^t}^* for gamma of multiplicative order 3.
      for (std::uint32_t third = ord / 3; third < ord; third += ord / 3) {
        const Elem gamma = field.exp(third);
        const Elem beta = field.mul(alpha, field.inv(gamma));
        if (beta != 0 && field.pow(beta, std::int64_t{1} << t) == beta) return true;
      }
      return false;
    }
    case Family::cck: {
      if (n % 6 != 0) return false;
      const int t = n / 6;
      if (t <= 1) return false;
      const std::int64_t want =
          (std::int64_t{1} << (2 * t)) + (std::int64_t{1} << t) + 1;
      if (d != want) return false;
      if (field.pow(alpha, std::int64_t{1} << (3 * t)) != alpha) return false;
      return field.rel_trace_in(3 * t, t, alpha) == 0;
    }
  }
  return false;
}

std::vector<FamilyMember> family_enumerate(const Field& field, Family family) {
  require_even(field, "family_enumerate");
  const int n = field.degree();
  const int k = n / 2;
  const std::uint32_t ord = field.order();

  std::vector<std::uint32_t> ds;
  switch (family) {
    case Family::gold:
      for (int t = 1; (std::uint64_t{1} << t) + 1 < ord; ++t)
        if ((n / std::gcd(n, t)) % 2 == 0)
          ds.push_back(static_cast<std::uint32_t>((std::uint32_t{1} << t) + 1));
      break;
    case Family::dillon: {
      const std::uint32_t base = (std::uint32_t{1} << k) - 1;
      for (std::uint32_t r = 1; r <= (std::uint32_t{1} << k); ++r)
        if (std::gcd(r, (std::uint32_t{1} << k) + 1) == 1) ds.push_back(r * base);
      break;
    }
    case Family::kasami:
      for (int t = 1; 2 * t <= n; ++t) {
        const std::uint64_t dt = (std::uint64_t{1} << (2 * t)) - (std::uint64_t{1} << t) + 1;
        if (dt >= ord) break;
        if (std::gcd(t, n) == 1) ds.push_back(static_cast<std::uint32_t>(dt));
      }
      break;
    case Family::leander:
      if (n % 4 == 0 && (n / 4) % 2 == 1) {
        const std::uint64_t b = (std::uint64_t{1} << (n / 4)) + 1;
        ds.push_back(static_cast<std::uint32_t>(b * b));
      }
      break;
    case Family::cck:
      if (n % 6 == 0 && n / 6 > 1) {
        const int t = n / 6;
        ds.push_back(static_cast<std::uint32_t>((std::uint32_t{1} << (2 * t)) +
                                                (std::uint32_t{1} << t) + 1));
      }
      break;
  }
  std::sort(ds.begin(), ds.end());

  std::vector<FamilyMember> members;
  for (std::uint32_t d : ds)
    for (std::uint32_t a = 1; a < field.size(); ++a)
      if (family_predicate(field, family, d, a)) members.push_back({family, d, a});
  return members;
}

}  // namespace bentmax
