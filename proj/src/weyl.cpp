#include "xsg/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>

#include "xsg/errors.hpp"

namespace xsg {

SignedPerm rotation(int n) {
  if (n < 0) throw precondition_error("rotation: degree must be >= 0");
  const int m = n + 1;
  std::vector<std::uint8_t> imgs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    imgs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + n) % m);
  return SignedPerm(std::move(imgs),
                    std::vector<std::int8_t>(static_cast<std::size_t>(m), 1));
}

SignedPerm reversal(int n) {
  if (n < 0) throw precondition_error("reversal: degree must be >= 0");
  const int m = n + 1;
  std::vector<std::uint8_t> imgs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    imgs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - i);
  return SignedPerm(std::move(imgs),
                    std::vector<std::int8_t>(static_cast<std::size_t>(m), -1));
}

SignedPerm adjacent_swap(int i, int n) {
  if (i < 1 || i > n)
    throw precondition_error("sigma(i): index must satisfy 1 <= i <= n");
  SignedPerm g = identity_perm(n);
  std::swap(g.images[static_cast<std::size_t>(i - 1)],
            g.images[static_cast<std::size_t>(i)]);
  return g;
}

SignedPerm leading_flip(int n) {
  SignedPerm g = identity_perm(n);
  g.signs[0] = -1;
  return g;
}

SignedPerm generator(Family family, const GenName& name, int n) {
  const auto gens = family_generators(family, n);
  if (std::find(gens.begin(), gens.end(), name) == gens.end())
    throw precondition_error("generator " + gen_name_string(name) +
                             " does not exist in family " +
                             family_name(family) + " at degree " +
                             std::to_string(n));
  switch (name.kind) {
    case GenName::Kind::Tau: return rotation(n);
    case GenName::Kind::Omega: return reversal(n);
    case GenName::Kind::Sigma: return adjacent_swap(name.index, n);
    case GenName::Kind::Kappa: return leading_flip(n);
  }
  throw precondition_error("unknown generator kind");
}

std::vector<GenName> family_generators(Family family, int n) {
  if (n < 0) throw precondition_error("degree must be >= 0");
  std::vector<GenName> gens;
  const auto sigmas = [&] {
    for (int i = 1; i <= n; ++i) gens.push_back({GenName::Kind::Sigma, i});
  };
  switch (family) {
    case Family::Trivial: break;
    case Family::Cyclic: gens.push_back({GenName::Kind::Tau, 0}); break;
    case Family::Symmetric: sigmas(); break;
    case Family::Reflexive: gens.push_back({GenName::Kind::Omega, 0}); break;
    case Family::Dihedral:
      gens.push_back({GenName::Kind::Tau, 0});
      gens.push_back({GenName::Kind::Omega, 0});
      break;
    case Family::Reflexosymmetric:
      gens.push_back({GenName::Kind::Omega, 0});
      sigmas();
      break;
    case Family::Weyl:
      sigmas();
      gens.push_back({GenName::Kind::Kappa, 0});
      break;
  }
  return gens;
}

namespace {

Word repeat(const Word& w, int k) {
  Word out;
  for (int r = 0; r < k; ++r) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// sigma_i^2, (sigma_i sigma_{i+1})^3 and the distant commutations
// (sigma_i sigma_j)^2 for |i-j| >= 2.
void symmetric_relations(int n, std::vector<Word>& out) {
  for (int i = 1; i <= n; ++i)
    out.push_back(repeat({{GenName::Kind::Sigma, i}}, 2));
  for (int i = 1; i + 1 <= n; ++i)
    out.push_back(
        repeat({{GenName::Kind::Sigma, i}, {GenName::Kind::Sigma, i + 1}}, 3));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      out.push_back(
          repeat({{GenName::Kind::Sigma, i}, {GenName::Kind::Sigma, j}}, 2));
}

} // namespace

std::vector<Word> presentation_relations(Family family, int n) {
  if (n < 0) throw precondition_error("degree must be >= 0");
  const GenName tau{GenName::Kind::Tau, 0};
  const GenName omega{GenName::Kind::Omega, 0};
  const GenName kappa{GenName::Kind::Kappa, 0};
  std::vector<Word> rels;
  switch (family) {
    case Family::Trivial:
      break;
    case Family::Cyclic:
      rels.push_back(repeat({tau}, n + 1));
      break;
    case Family::Symmetric:
      symmetric_relations(n, rels);
      break;
    case Family::Reflexive:
      rels.push_back(repeat({omega}, 2));
      break;
    case Family::Dihedral:
      rels.push_back(repeat({tau}, n + 1));
      rels.push_back(repeat({omega}, 2));
      rels.push_back(repeat({tau, omega}, 2));
      break;
    case Family::Reflexosymmetric:
      symmetric_relations(n, rels);
      rels.push_back(repeat({omega}, 2));
      // omega conjugates sigma_i to sigma_{n+1-i}; the commutation with
      // omega therefore takes the reflected form.
      for (int i = 1; i <= n; ++i)
        rels.push_back({omega,
                        {GenName::Kind::Sigma, i},
                        omega,
                        {GenName::Kind::Sigma, n + 1 - i}});
      break;
    case Family::Weyl:
      symmetric_relations(n, rels);
      rels.push_back(repeat({kappa}, 2));
      if (n >= 1)
        rels.push_back(repeat({{GenName::Kind::Sigma, 1}, kappa}, 4));
      for (int i = 2; i <= n; ++i)
        rels.push_back(repeat({{GenName::Kind::Sigma, i}, kappa}, 2));
      break;
  }
  return rels;
}

namespace {

bool all_plus(const SignedPerm& g) {
  return std::all_of(g.signs.begin(), g.signs.end(),
                     [](std::int8_t s) { return s == 1; });
}

bool all_minus(const SignedPerm& g) {
  return std::all_of(g.signs.begin(), g.signs.end(),
                     [](std::int8_t s) { return s == -1; });
}

bool is_rotation_map(const SignedPerm& g) {
  const int m = g.degree() + 1;
  const int s = g.image(0);
  for (int i = 0; i < m; ++i)
    if (g.image(i) != (i + s) % m) return false;
  return true;
}

bool is_reflection_map(const SignedPerm& g) {
  const int m = g.degree() + 1;
  const int c = g.image(0);
  for (int i = 0; i < m; ++i)
    if (g.image(i) != ((c - i) % m + m) % m) return false;
  return true;
}

} // namespace

bool is_member(Family family, const SignedPerm& g) {
  switch (family) {
    case Family::Trivial:
      return g.is_identity();
    case Family::Cyclic:
      return all_plus(g) && is_rotation_map(g);
    case Family::Symmetric:
      return all_plus(g);
    case Family::Reflexive:
      return g.is_identity() || g == reversal(g.degree());
    case Family::Dihedral:
      return (all_plus(g) && is_rotation_map(g)) ||
             (all_minus(g) && is_reflection_map(g));
    case Family::Reflexosymmetric:
      return all_plus(g) || all_minus(g);
    case Family::Weyl:
      return true;
  }
  return false;
}

namespace {

struct ClosureData {
  std::vector<SignedPerm> elements;          // sorted
  std::vector<Word> words;                   // parallel to elements
};

const ClosureData& closure_data(Family family, int n) {
  static std::map<std::pair<Family, int>, ClosureData> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(family, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const auto gen_names = family_generators(family, n);
  std::vector<SignedPerm> gens;
  gens.reserve(gen_names.size());
  for (const auto& gn : gen_names) gens.push_back(generator(family, gn, n));

  std::map<SignedPerm, Word> discovered;
  std::queue<SignedPerm> frontier;
  discovered.emplace(identity_perm(n), Word{});
  frontier.push(identity_perm(n));
  while (!frontier.empty()) {
    SignedPerm g = frontier.front();
    frontier.pop();
    const Word& w = discovered.at(g);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      SignedPerm next = compose(g, gens[k]);
      if (discovered.count(next)) continue;
      Word nw = w;
      nw.push_back(gen_names[k]);
      discovered.emplace(std::move(next), std::move(nw));
      frontier.push(compose(g, gens[k]));
    }
  }

  ClosureData data;
  data.elements.reserve(discovered.size());
  data.words.reserve(discovered.size());
  for (auto& [elem, word] : discovered) {
    data.elements.push_back(elem);
    data.words.push_back(word);
  }
  auto [pos, inserted] = cache.emplace(key, std::move(data));
  (void)inserted;
  return pos->second;
}

} // namespace

std::vector<SignedPerm> family_closure(Family family, int n) {
  return closure_data(family, n).elements;
}

std::size_t closure_order(Family family, int n) {
  return closure_data(family, n).elements.size();
}

Word generator_word(Family family, const SignedPerm& g) {
  const auto& data = closure_data(family, g.degree());
  auto it = std::lower_bound(data.elements.begin(), data.elements.end(), g);
  if (it == data.elements.end() || *it != g)
    throw precondition_error("generator_word: element is not in the " +
                             family_name(family) + " family at degree " +
                             std::to_string(g.degree()));
  return data.words[static_cast<std::size_t>(it - data.elements.begin())];
}

SignedPerm evaluate_word(Family family, const Word& w, int n) {
  SignedPerm g = identity_perm(n);
  for (const auto& gn : w) g = compose(g, generator(family, gn, n));
  return g;
}

} // namespace xsg
