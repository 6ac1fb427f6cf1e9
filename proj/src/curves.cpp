#include "fano/curves.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fano/number_theory.hpp"

namespace fano {

std::string CurveType::name() const {
  const char* letter = kind == DuValKind::A ? "A" : kind == DuValKind::D ? "D" : "E";
  return letter + std::to_string(index);
}

CurveType curve_type_data(DuValKind kind, int index) {
  switch (kind) {
    case DuValKind::A:
      if (index < 1) throw std::invalid_argument("A_n needs n >= 1");
      return {kind, index, index + 1, index + 1, index + 1};
    case DuValKind::D:
      if (index < 4) throw std::invalid_argument("D_m needs m >= 4");
      return {kind, index, index + 1, 4 * std::int64_t(index) - 8, 4};
    case DuValKind::E:
      switch (index) {
        case 6: return {kind, 6, 7, 24, 3};
        case 7: return {kind, 7, 8, 48, 2};
        case 8: return {kind, 8, 9, 120, 1};
        default: throw std::invalid_argument("E_k needs k in {6,7,8}");
      }
  }
  throw std::logic_error("unknown Du Val kind");
}

std::vector<CurveType> curve_types_within(const Rational& bound) {
  std::vector<CurveType> out;
  // Weights grow with the index inside each family.
  for (int n = 1;; ++n) {
    auto t = curve_type_data(DuValKind::A, n);
    if (t.weight() > bound) break;
    out.push_back(t);
  }
  for (int m = 4;; ++m) {
    auto t = curve_type_data(DuValKind::D, m);
    if (t.weight() > bound) break;
    out.push_back(t);
  }
  for (int k = 6; k <= 8; ++k) {
    auto t = curve_type_data(DuValKind::E, k);
    if (t.weight() <= bound) out.push_back(t);
  }
  return out;
}

Rational CurveConfig::weight() const {
  Rational sum;
  for (const auto& c : entries) sum += c.type.weight() * c.degree;
  return sum;
}

Rational CurveConfig::j_weight() const {
  Rational sum;
  for (const auto& c : entries) sum += c.type.j_weight() * c.degree;
  return sum;
}

std::int64_t CurveConfig::j_lcm() const {
  std::int64_t acc = 1;
  for (const auto& c : entries) acc = std::lcm(acc, c.type.j);
  return acc;
}

std::string CurveConfig::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += "(" + entries[i].type.name() + "," + std::to_string(entries[i].degree) + ")";
  }
  return out + "}";
}

Rational lemma27_rhs(const SieveRow& row, std::int64_t q) { return ja_bound(row, q); }

std::vector<CurveConfig> curve_config_search(const Rational& bound,
                                             std::optional<std::int64_t> ja_divides_lcm,
                                             bool require_nonempty) {
  if (bound.is_negative()) throw std::invalid_argument("curve_config_search: negative bound");
  std::vector<CurveEntry> atoms;
  for (const auto& t : curve_types_within(bound)) {
    for (std::int64_t d = 1; t.weight() * d <= bound; ++d) atoms.push_back({t, d});
  }
  std::sort(atoms.begin(), atoms.end());

  std::vector<CurveConfig> out;
  CurveConfig current;
  auto keep = [&](const CurveConfig& c) {
    if (require_nonempty && c.entries.empty()) return false;
    if (ja_divides_lcm && c.j_lcm() % *ja_divides_lcm != 0) return false;
    return true;
  };
  // Multisets as non-decreasing atom sequences.
  auto extend = [&](auto&& self, std::size_t start, const Rational& used) -> void {
    if (keep(current)) out.push_back(current);
    for (std::size_t i = start; i < atoms.size(); ++i) {
      Rational next = used + atoms[i].type.weight() * atoms[i].degree;
      if (next > bound) continue;
      current.entries.push_back(atoms[i]);
      self(self, i, next);
      current.entries.pop_back();
    }
  };
  extend(extend, 0, Rational(0));
  std::sort(out.begin(), out.end(),
            [](const CurveConfig& a, const CurveConfig& b) { return a.entries < b.entries; });
  return out;
}

std::vector<Rational> lemma211_values(const Basket& basket) {
  if (basket.empty()) throw std::invalid_argument("lemma211_values: empty basket");
  std::set<Rational> sums{Rational(0)};
  for (const auto& p : basket.points()) {
    std::set<Rational> local;
    for (std::int64_t i = 0; i < p.r; ++i) {
      std::int64_t ib = (i * p.b) % p.r;
      local.insert(Rational(ib * (p.r - ib), 2 * p.r));
    }
    std::set<Rational> next;
    for (const auto& s : sums) {
      for (const auto& l : local) next.insert(s + l);
    }
    sums = std::move(next);
  }
  std::set<Rational> values;
  for (const auto& s : sums) values.insert(Rational(4) - 2 * s);
  return {values.begin(), values.end()};
}

Verdict torsion_square_verdict(const std::vector<CurveConfig>& configs,
                               const std::vector<Rational>& values, const Rational& crepant) {
  const CurveConfig single_a1{{{curve_type_data(DuValKind::A, 1), 1}}};
  if (configs.size() != 1 || configs.front() != single_a1) return Verdict::inconclusive;
  for (const auto& v : values) {
    if (is_rational_square(v / crepant)) return Verdict::inconclusive;
  }
  return Verdict::excluded;
}

TorsionExclusionRecord prop42_exclusion(const SieveRow& row, std::int64_t q, std::int64_t q_hat) {
  if (q == q_hat) throw std::invalid_argument("torsion exclusion needs q != q_W");
  if (row.basket != Basket{{3, 1}} || row.rx_deg != 200) {
    throw std::invalid_argument("torsion exclusion applies to basket {(3,1)} with r_X c1^3 = 200, got " +
                                row.key());
  }
  TorsionExclusionRecord rec;
  rec.row_key = row.key();
  rec.q = q;
  rec.q_hat = q_hat;
  rec.curve_bound = lemma27_rhs(row, q);
  rec.configs = curve_config_search(rec.curve_bound, std::nullopt, true);
  rec.values = lemma211_values(row.basket);
  for (const auto& v : rec.values) rec.quotients.push_back(v / kCrepantA1SelfIntersection);
  rec.verdict = torsion_square_verdict(rec.configs, rec.values, kCrepantA1SelfIntersection);
  return rec;
}

CurveExclusionRecord prop41_checks(const SieveRow& row, std::int64_t q, std::int64_t ja,
                                   const FilterConstants& consts, std::span<const Table2Entry> table2) {
  CurveExclusionRecord rec;
  rec.row_key = row.key();
  auto add = [&](std::string name, bool passed, std::string witness) {
    rec.checks.push_back({std::move(name), passed, std::move(witness)});
  };

  const Rational bound = lemma27_rhs(row, q);
  add("curve bound", !bound.is_negative(), "r_X c2c1 - r_X c1^3 / km(" + std::to_string(q) + ") = " + bound.str());

  auto configs = curve_config_search(bound, ja, true);
  bool unique = configs.size() == 1;
  std::string listed;
  for (const auto& c : configs) listed += (listed.empty() ? "" : " ") + c.str();
  add("unique curve configuration", unique, listed.empty() ? "none" : listed);

  // Crepant blow-up of a curve C with j_C | q: -K_Y ~ (q / j_C) B.
  std::int64_t cover_index = 0;
  std::string blown_up;
  if (unique) {
    for (const auto& e : configs.front().entries) {
      if (e.type.j > 1 && q % e.type.j == 0) {
        cover_index = q / e.type.j;
        blown_up = e.type.name();
        break;
      }
    }
  }
  add("crepant blow-up index", cover_index > 0,
      cover_index > 0 ? blown_up + ": q/j = " + std::to_string(cover_index) : "no curve with j | q");

  auto h0 = h0_from_degree(row.degree(), row.basket);
  add("h0(-K)", h0.has_value(), h0 ? std::to_string(*h0) : "not integral");

  // Gorenstein model: c1^3 = 2 h0 - 6 with h0 at least the original, and <= the Picard-one bound.
  bool gorenstein_blocked = h0.has_value() && cover_index > 0;
  std::string degrees;
  if (gorenstein_blocked) {
    for (std::int64_t c = 2 * *h0 - 6; Rational(c) <= consts.picard_one_bound; c += 2) {
      degrees += (degrees.empty() ? "" : ",") + std::to_string(c);
      if (c % cover_index == 0) gorenstein_blocked = false;
    }
  }
  add("Gorenstein escape", gorenstein_blocked,
      "no c in {" + degrees + "} divisible by " + std::to_string(cover_index));

  if (!table2.empty()) {
    bool closed = cover_index > 0;
    std::string others;
    for (const auto& entry : table2) {
      if (cover_index == 0 || entry.q_hat % cover_index != 0) continue;
      if (entry.row.basket != row.basket || entry.row.rx_deg != row.rx_deg || entry.q != q) {
        closed = false;
        others += " " + entry.row.key() + ";q=" + std::to_string(entry.q);
      }
    }
    add("non-Gorenstein escape", closed,
        closed ? "only this row has " + std::to_string(cover_index) + " | q_W" : "also:" + others);
  }

  add("terminal escape", q > consts.suzuki_bound,
      std::to_string(q) + " > " + std::to_string(consts.suzuki_bound));

  add("Mori fibre space escape", cover_index > 0,
      "general fibre would have Weil index >= " + std::to_string(cover_index) +
          ", above the del Pezzo and P^1 bounds (cited)");

  rec.excluded = std::all_of(rec.checks.begin(), rec.checks.end(), [](const SubCheck& c) { return c.passed; });
  if (!rec.excluded) {
    std::string failed;
    for (const auto& c : rec.checks) {
      if (!c.passed) failed += " [" + c.name + ": " + c.witness + "]";
    }
    throw std::runtime_error("curve exclusion of " + rec.row_key + " failed:" + failed);
  }
  return rec;
}

}  // namespace fano
