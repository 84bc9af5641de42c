#include "dpl/truth_table.hpp"

#include <algorithm>

namespace dpl {

namespace {

// Cubes over k variables in base 3: digit 0/1 fixes the variable false/true,
// digit 2 leaves it free.
struct CubeTable {
  std::size_t k;
  std::vector<std::size_t> pow3;

  explicit CubeTable(std::size_t vars) : k(vars), pow3(vars + 1, 1) {
    for (std::size_t i = 1; i <= vars; ++i) pow3[i] = pow3[i - 1] * 3;
  }

  std::size_t size() const { return pow3[k]; }
  std::size_t digit(std::size_t cube, std::size_t i) const { return cube / pow3[i] % 3; }

  bool covers(std::size_t cube, std::size_t minterm) const {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t d = digit(cube, i);
      if (d != 2 && d != ((minterm >> i) & 1U)) return false;
    }
    return true;
  }

  std::size_t literals(std::size_t cube) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < k; ++i) n += digit(cube, i) != 2;
    return n;
  }
};

// Prime implicants of `f` (a table over 2^k minterms), reduced to a cover.
std::vector<std::size_t> prime_cover(const std::vector<bool>& f, const CubeTable& t) {
  std::vector<bool> implicant(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) {
    std::size_t free_digit = t.k;
    std::size_t minterm = 0;
    for (std::size_t i = 0; i < t.k; ++i) {
      const std::size_t d = t.digit(c, i);
      if (d == 2) {
        free_digit = i;
        break;
      }
      minterm |= d << i;
    }
    if (free_digit == t.k)
      implicant[c] = f[minterm];
    else
      implicant[c] = implicant[c - 2 * t.pow3[free_digit]] && implicant[c - t.pow3[free_digit]];
  }

  std::vector<std::size_t> primes;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (!implicant[c]) continue;
    bool prime = true;
    for (std::size_t i = 0; i < t.k && prime; ++i) {
      const std::size_t d = t.digit(c, i);
      if (d != 2 && implicant[c + (2 - d) * t.pow3[i]]) prime = false;
    }
    if (prime) primes.push_back(c);
  }

  std::vector<std::size_t> minterms;
  for (std::size_t m = 0; m < f.size(); ++m)
    if (f[m]) minterms.push_back(m);

  std::vector<std::vector<std::size_t>> covered_by(minterms.size());
  for (std::size_t p = 0; p < primes.size(); ++p)
    for (std::size_t j = 0; j < minterms.size(); ++j)
      if (t.covers(primes[p], minterms[j])) covered_by[j].push_back(p);

  std::vector<bool> chosen(primes.size());
  std::vector<bool> done(minterms.size());
  auto take = [&](std::size_t p) {
    chosen[p] = true;
    for (std::size_t j = 0; j < minterms.size(); ++j)
      if (!done[j] && t.covers(primes[p], minterms[j])) done[j] = true;
  };
  for (std::size_t j = 0; j < minterms.size(); ++j)
    if (covered_by[j].size() == 1 && !chosen[covered_by[j][0]]) take(covered_by[j][0]);

  while (true) {
    std::size_t best = primes.size();
    std::size_t best_gain = 0;
    for (std::size_t p = 0; p < primes.size(); ++p) {
      if (chosen[p]) continue;
      std::size_t gain = 0;
      for (std::size_t j = 0; j < minterms.size(); ++j)
        if (!done[j] && t.covers(primes[p], minterms[j])) ++gain;
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 && t.literals(primes[p]) < t.literals(primes[best]))) {
        best = p;
        best_gain = gain;
      }
    }
    if (best == primes.size()) break;
    take(best);
  }

  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < primes.size(); ++p)
    if (chosen[p]) out.push_back(primes[p]);
  return out;
}

Formula literal(const Frame& frame, std::size_t atom_index, bool positive) {
  Formula a = Formula::atom(frame.atoms()[atom_index]);
  return positive ? a : Formula::neg(a);
}

}  // namespace

std::vector<std::size_t> support(const WorldSet& models, const Frame& frame) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < frame.atom_count(); ++i) {
    const World bit = World{1} << i;
    for (World w = 0; w < frame.world_count(); ++w) {
      if ((w & bit) == 0 && models.contains(w) != models.contains(w | bit)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::optional<Formula> synthesize(const WorldSet& models, const Frame& frame, std::size_t max_support) {
  if (models.full()) return Formula::one();
  if (models.empty()) return Formula::zero();
  const auto vars = support(models, frame);
  if (vars.size() > max_support) return std::nullopt;

  const CubeTable t(vars.size());
  std::vector<bool> f(std::size_t{1} << vars.size());
  std::vector<bool> not_f(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    World w = 0;
    for (std::size_t j = 0; j < vars.size(); ++j)
      if ((m >> j) & 1U) w |= World{1} << vars[j];
    f[m] = models.contains(w);
    not_f[m] = !f[m];
  }

  const auto dnf_cubes = prime_cover(f, t);
  const auto cnf_cubes = prime_cover(not_f, t);
  std::size_t dnf_size = 0, cnf_size = 0;
  for (auto c : dnf_cubes) dnf_size += t.literals(c);
  for (auto c : cnf_cubes) cnf_size += t.literals(c);

  // Each cube becomes a conjunction of literals (DNF term) or, complemented,
  // a disjunction (CNF clause).
  const bool cnf = cnf_size <= dnf_size;
  auto cubes = cnf ? cnf_cubes : dnf_cubes;
  // Order parts by their literals in atom order: positive, negative, absent.
  auto rank = [&](std::size_t c, std::size_t i) {
    const std::size_t d = t.digit(c, i);
    if (d == 2) return 2;
    return (d == 1) != cnf ? 0 : 1;
  };
  std::sort(cubes.begin(), cubes.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < t.k; ++i)
      if (rank(a, i) != rank(b, i)) return rank(a, i) < rank(b, i);
    return false;
  });
  std::optional<Formula> out;
  for (auto c : cubes) {
    std::optional<Formula> part;
    for (std::size_t i = 0; i < t.k; ++i) {
      const std::size_t d = t.digit(c, i);
      if (d == 2) continue;
      Formula lit = literal(frame, vars[i], cnf ? d == 0 : d == 1);
      if (!part)
        part = lit;
      else
        part = cnf ? make_oplus(*part, lit) : Formula::with(*part, lit);
    }
    if (!out)
      out = *part;
    else
      out = cnf ? Formula::with(*out, *part) : make_oplus(*out, *part);
  }
  return out;
}

}  // namespace dpl
