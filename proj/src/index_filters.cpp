#include "fano/index_filters.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <tuple>

#include "fano/number_theory.hpp"

namespace fano {

namespace {

constexpr std::array<std::pair<Exclusion, std::string_view>, 11> kExclusionNames{{
    {Exclusion::rr_integrality, "RR-INTEGRALITY"},
    {Exclusion::km_bound, "KM-BOUND"},
    {Exclusion::thm25_1, "THM25-1"},
    {Exclusion::qhat_div, "QHAT-DIV"},
    {Exclusion::ja_bound_24, "JA-BOUND-24"},
    {Exclusion::ja_bound_25, "JA-BOUND-25"},
    {Exclusion::lemma_210, "LEMMA-210"},
    {Exclusion::torsion_324, "TORSION-324"},
    {Exclusion::torsion_q7, "TORSION-Q7"},
    {Exclusion::curve_prop41, "CURVE-PROP41"},
    {Exclusion::torsion_prop42, "TORSION-PROP42"},
}};

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Exclusion reason) {
  for (const auto& [e, name] : kExclusionNames) {
    if (e == reason) return name;
  }
  return "?";
}

std::optional<Exclusion> exclusion_from_string(std::string_view text) {
  for (const auto& [e, name] : kExclusionNames) {
    if (name == text) return e;
  }
  return std::nullopt;
}

std::string_view to_string(SubCase sub) {
  switch (sub) {
    case SubCase::low_unequal: return "LOW q!=qW";
    case SubCase::low_ja_eq_q: return "LOW q=qW=JA";
    case SubCase::low_ja_ne_q: return "LOW q=qW, JA!=q";
    case SubCase::six_unequal: return "SIX q!=qW";
    case SubCase::six_equal: return "SIX q=qW=6";
    case SubCase::high_ja_eq_q: return "HIGH JA=q";
    case SubCase::high_ja_ne_q: return "HIGH JA!=q";
  }
  return "?";
}

QRegime regime_of(SubCase sub) {
  switch (sub) {
    case SubCase::low_unequal:
    case SubCase::low_ja_eq_q:
    case SubCase::low_ja_ne_q: return QRegime::low;
    case SubCase::six_unequal:
    case SubCase::six_equal: return QRegime::six;
    case SubCase::high_ja_eq_q:
    case SubCase::high_ja_ne_q: return QRegime::high;
  }
  throw std::logic_error("unknown sub-case");
}

void FilterConstants::validate() const {
  if (weak_fano_bound <= 0 || picard_one_bound <= 0 || suzuki_bound <= 0) {
    throw std::invalid_argument("filter constants must be positive");
  }
}

bool IndexedCase::fails(Exclusion e) const {
  return std::find(failed.begin(), failed.end(), e) != failed.end();
}

std::string IndexedCase::key() const {
  return row.key() + ";q=" + std::to_string(q) + ";qW=" + std::to_string(q_hat) +
         ";JA=" + std::to_string(ja);
}

Rational prime_power_sum(std::int64_t J) {
  if (J < 1) throw std::invalid_argument("prime_power_sum: J must be positive");
  Rational sum;
  for (const auto& pp : factorize(J)) {
    std::int64_t v = pp.value();
    sum += Rational(v) - Rational(1, v);
  }
  return sum;
}

Rational ja_bound(const SieveRow& row, std::int64_t q) {
  return row.rx_c2c1 - km_reciprocal(q) * row.rx_deg;
}

std::vector<std::int64_t> admissible_ja(const Rational& bound, bool strict) {
  auto fits = [&](const Rational& s) { return strict ? s < bound : s <= bound; };
  std::vector<std::int64_t> out;
  if (!fits(Rational(0))) return out;

  // p^a - 1/p^a >= p - 1/2, so no prime above bound + 1 can appear.
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; Rational(p) - Rational(1, 2) <= bound; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  auto extend = [&](auto&& self, std::size_t i, std::int64_t J, const Rational& used) -> void {
    if (i == primes.size()) {
      out.push_back(J);
      return;
    }
    self(self, i + 1, J, used);
    std::int64_t pa = 1;
    for (;;) {
      pa *= primes[i];
      Rational next = used + Rational(pa) - Rational(1, pa);
      if (!fits(next)) break;
      self(self, i + 1, J * pa, next);
    }
  };
  extend(extend, 0, 1, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

bool thm25_integrality(std::int64_t ja, std::int64_t rx_deg, std::int64_t q) {
  if (ja < 1 || rx_deg < 1 || q < 1) throw std::invalid_argument("thm25_integrality: positive inputs");
  return (ja * rx_deg) % (q * q) == 0;
}

std::optional<Exclusion> torsion_cover_filter(const IndexedCase& c, const FilterConstants& consts) {
  if (c.q == c.q_hat) throw std::invalid_argument("torsion_cover_filter needs q != q_W");
  if (c.q % c.q_hat != 0) throw std::invalid_argument("torsion_cover_filter needs q_W | q");
  Rational cover_degree = Rational(c.q / c.q_hat) * c.row.degree();
  if (cover_degree > consts.weak_fano_bound) return Exclusion::torsion_324;
  return std::nullopt;
}

std::optional<Exclusion> torsion_q7_filter(const IndexedCase& c, const FilterConstants& consts) {
  if (c.q < 7) throw std::invalid_argument("torsion_q7_filter needs q >= 7");
  if (c.q == c.q_hat) return std::nullopt;
  // Any torsion of order s >= 2 gives a Picard-one canonical Fano of degree >= s * c1^3.
  if (Rational(2) * c.row.degree() > consts.picard_one_bound) return Exclusion::torsion_q7;
  return std::nullopt;
}

std::optional<Exclusion> q1_stability_filter(const SieveRow& row) {
  if (Rational(row.rx_deg) > Rational(3) * row.rx_c2c1) return Exclusion::lemma_210;
  return std::nullopt;
}

std::optional<Exclusion> audit_row(const SieveRow& row, QRegime regime) {
  if (!h0_from_degree(row.degree(), row.basket)) return Exclusion::rr_integrality;
  if (row.rx_c2c1 != c2c1_from_basket(row.basket) * row.r_x) return Exclusion::rr_integrality;
  Rational slack = row.rx_c2c1 - regime_reciprocal(regime) * row.rx_deg;
  if (slack != row.slack) return Exclusion::km_bound;
  bool ok = regime == QRegime::high ? slack > 0 : !slack.is_negative();
  if (!ok) return Exclusion::km_bound;
  return std::nullopt;
}

std::vector<QJaPair> square_factor_pairs(std::int64_t rx_deg, std::int64_t q_min,
                                         std::optional<std::int64_t> q_max) {
  if (q_max && q_min > *q_max) throw std::invalid_argument("square_factor_pairs: q_min > q_max");
  std::vector<QJaPair> out;
  for (auto d : square_divisors(rx_deg)) {
    if (d == 1) continue;
    for (auto ja : divisors(rx_deg / (d * d))) {
      std::int64_t q = d * ja;
      if (q < q_min || (q_max && q > *q_max)) continue;
      out.push_back({q, ja});
    }
  }
  return out;
}

void apply_filters(SubcasePlan& plan) {
  for (auto& c : plan.candidates) {
    c.reason.reset();
    c.failed.clear();
    for (const auto& f : plan.filters) {
      if (!f.rejects(c)) continue;
      c.failed.push_back(f.reason);
      if (!c.reason) c.reason = f.reason;
    }
  }
}

std::vector<std::int64_t> Table2Entry::ja_values() const {
  std::vector<std::int64_t> out;
  for (const auto& j : ja) out.push_back(j.ja);
  return out;
}

const SubcasePlan& CaseAnalysis::plan(SubCase id) const {
  for (const auto& p : plans) {
    if (p.id == id) return p;
  }
  throw std::out_of_range("no plan for sub-case");
}

namespace {

CaseFilter thm25_filter() {
  return {Exclusion::thm25_1,
          [](const IndexedCase& c) { return !thm25_integrality(c.ja, c.row.rx_deg, c.q); }};
}

CaseFilter torsion_filter(const FilterConstants& consts) {
  return {Exclusion::torsion_324,
          [consts](const IndexedCase& c) { return torsion_cover_filter(c, consts).has_value(); }};
}

// Prime-power bound with the Kawamata-Miyaoka coefficient of the candidate's own q.
CaseFilter ja_bound_24_filter() {
  return {Exclusion::ja_bound_24,
          [](const IndexedCase& c) { return prime_power_sum(c.ja) > ja_bound(c.row, c.q); }};
}

// Uniform prime-power bound for q >= 7: strict, coefficient 1/4.
CaseFilter ja_bound_25_filter() {
  return {Exclusion::ja_bound_25, [](const IndexedCase& c) {
            return prime_power_sum(c.ja) >= c.row.rx_c2c1 - Rational(c.row.rx_deg, 4);
          }};
}

CaseFilter stability_filter() {
  return {Exclusion::lemma_210,
          [](const IndexedCase& c) { return c.q == 1 && q1_stability_filter(c.row).has_value(); }};
}

CaseFilter qhat_filter() {
  return {Exclusion::qhat_div, [](const IndexedCase& c) { return c.row.rx_deg % c.q_hat != 0; }};
}

}  // namespace

std::vector<SubcasePlan> plan_case_analysis(const CaseTable& low, const CaseTable& six,
                                            const CaseTable& high, const FilterConstants& consts) {
  consts.validate();
  std::vector<SubcasePlan> plans;

  {  // q <= 5, q != q_W: q_W | r_X c1^3, q_W | q, J_A under the prime-power bound
    SubcasePlan p{SubCase::low_unequal, {}, {thm25_filter(), torsion_filter(consts)}};
    for (const auto& row : low.rows()) {
      auto jas = admissible_ja(row.slack, false);
      for (auto q_hat : divisors(row.rx_deg)) {
        for (std::int64_t q = 2; q <= 5; ++q) {
          if (q % q_hat != 0 || q == q_hat) continue;
          for (auto ja : jas) p.candidates.push_back({row, q, q_hat, ja, p.id, {}, {}});
        }
      }
    }
    plans.push_back(std::move(p));
  }
  {  // q <= 5, q = q_W = J_A
    SubcasePlan p{SubCase::low_ja_eq_q, {}, {ja_bound_24_filter(), stability_filter()}};
    for (const auto& row : low.rows()) {
      for (std::int64_t q = 1; q <= 5; ++q) {
        if (row.rx_deg % q == 0) p.candidates.push_back({row, q, q, q, p.id, {}, {}});
      }
    }
    plans.push_back(std::move(p));
  }
  {  // q <= 5, q = q_W, J_A != q: q/J_A is a square factor
    SubcasePlan p{SubCase::low_ja_ne_q, {}, {thm25_filter(), ja_bound_24_filter(), stability_filter()}};
    for (const auto& row : low.rows()) {
      for (auto pair : square_factor_pairs(row.rx_deg, 1, 5)) {
        p.candidates.push_back({row, pair.q, pair.q, pair.ja, p.id, {}, {}});
      }
    }
    plans.push_back(std::move(p));
  }
  {  // q = 6, q != q_W. The q_W = 1 covers are checked before integrality.
    SubcasePlan p{SubCase::six_unequal, {}, {torsion_filter(consts), thm25_filter()}};
    for (const auto& row : six.rows()) {
      auto jas = admissible_ja(row.slack, false);
      for (auto q_hat : divisors(6)) {
        if (q_hat == 6 || row.rx_deg % q_hat != 0) continue;
        for (auto ja : jas) p.candidates.push_back({row, 6, q_hat, ja, p.id, {}, {}});
      }
    }
    plans.push_back(std::move(p));
  }
  {  // q = q_W = 6, J_A | q
    SubcasePlan p{SubCase::six_equal, {}, {qhat_filter(), thm25_filter(), ja_bound_24_filter()}};
    for (const auto& row : six.rows()) {
      for (auto ja : divisors(6)) p.candidates.push_back({row, 6, 6, ja, p.id, {}, {}});
    }
    plans.push_back(std::move(p));
  }
  {  // q >= 7, q = q_W = J_A
    SubcasePlan p{SubCase::high_ja_eq_q, {}, {ja_bound_25_filter(), ja_bound_24_filter()}};
    for (const auto& row : high.rows()) {
      for (auto q : divisors(row.rx_deg)) {
        if (q >= 7) p.candidates.push_back({row, q, q, q, p.id, {}, {}});
      }
    }
    plans.push_back(std::move(p));
  }
  {  // q >= 7, q = q_W, J_A != q
    SubcasePlan p{SubCase::high_ja_ne_q, {},
                  {thm25_filter(), ja_bound_25_filter(), ja_bound_24_filter()}};
    for (const auto& row : high.rows()) {
      for (auto pair : square_factor_pairs(row.rx_deg, 7, std::nullopt)) {
        p.candidates.push_back({row, pair.q, pair.q, pair.ja, p.id, {}, {}});
      }
    }
    plans.push_back(std::move(p));
  }

  for (auto& p : plans) apply_filters(p);
  return plans;
}

std::vector<Table2Entry> assemble_table2(const std::vector<SubcasePlan>& plans) {
  using Key = std::tuple<Basket, std::int64_t, std::int64_t, std::int64_t>;
  std::map<Key, Table2Entry> grouped;
  for (const auto& p : plans) {
    for (const auto& c : p.candidates) {
      if (!c.survivor()) continue;
      auto& entry = grouped[Key{c.row.basket, c.row.rx_deg, c.q, c.q_hat}];
      entry.row = c.row;
      entry.q = c.q;
      entry.q_hat = c.q_hat;
      entry.ja.push_back({c.ja, c.origin});
    }
  }
  std::vector<Table2Entry> out;
  for (auto& [key, entry] : grouped) {
    std::sort(entry.ja.begin(), entry.ja.end(),
              [](const Table2Ja& a, const Table2Ja& b) { return a.ja > b.ja; });
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const Table2Entry& a, const Table2Entry& b) {
    if (a.row.degree() != b.row.degree()) return a.row.degree() > b.row.degree();
    if (a.q != b.q) return a.q > b.q;
    if (a.q_hat != b.q_hat) return a.q_hat > b.q_hat;
    return a.row.basket < b.row.basket;
  });
  return out;
}

CaseAnalysis run_case_analysis(const Window& window, const FilterConstants& consts) {
  CaseAnalysis out;
  out.window = window;
  out.consts = consts;
  out.low = build_case_table(QRegime::low, window);
  out.six = build_case_table(QRegime::six, window);
  out.high = build_case_table(QRegime::high, window);
  out.plans = plan_case_analysis(out.low, out.six, out.high, consts);

  // q >= 7 with q != q_W: the smallest torsion order s = 2 already breaks the bound.
  RuleCheck q7{"HIGH q!=qW discharged by TORSION-Q7", true, ""};
  for (const auto& row : out.high.rows()) {
    IndexedCase probe{row, 14, 7, 1, SubCase::high_ja_eq_q, {}, {}};
    if (!torsion_q7_filter(probe, consts)) {
      q7.holds = false;
      q7.witness = "fails at " + row.key();
      break;
    }
  }
  if (q7.holds) {
    q7.witness = "2*c1^3 > " + consts.picard_one_bound.str() + " on all " +
                 std::to_string(out.high.rows().size()) + " rows";
  }
  out.rules.push_back(q7);

  out.table2 = assemble_table2(out.plans);
  return out;
}

}  // namespace fano
