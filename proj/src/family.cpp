#include "xsg/family.hpp"

#include <sstream>

#include "xsg/errors.hpp"

namespace xsg {

std::string family_name(Family f) {
  switch (f) {
    case Family::Trivial: return "trivial";
    case Family::Cyclic: return "cyclic";
    case Family::Symmetric: return "symmetric";
    case Family::Reflexive: return "reflexive";
    case Family::Dihedral: return "dihedral";
    case Family::Reflexosymmetric: return "reflexosymmetric";
    case Family::Weyl: return "weyl";
  }
  throw precondition_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "trivial") return Family::Trivial;
  if (name == "cyclic") return Family::Cyclic;
  if (name == "symmetric") return Family::Symmetric;
  if (name == "reflexive") return Family::Reflexive;
  if (name == "dihedral") return Family::Dihedral;
  if (name == "reflexosymmetric") return Family::Reflexosymmetric;
  if (name == "weyl") return Family::Weyl;
  throw precondition_error("unknown family name '" + name + "'");
}

std::string gen_name_string(const GenName& g) {
  switch (g.kind) {
    case GenName::Kind::Tau: return "tau";
    case GenName::Kind::Omega: return "omega";
    case GenName::Kind::Sigma: return "sigma" + std::to_string(g.index);
    case GenName::Kind::Kappa: return "kappa";
  }
  throw precondition_error("unknown generator kind");
}

GenName gen_name_from_string(const std::string& s) {
  if (s == "tau") return {GenName::Kind::Tau, 0};
  if (s == "omega") return {GenName::Kind::Omega, 0};
  if (s == "kappa") return {GenName::Kind::Kappa, 0};
  if (s.rfind("sigma", 0) == 0 && s.size() > 5) {
    int idx = 0;
    for (std::size_t i = 5; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw precondition_error("bad generator name '" + s + "'");
      idx = idx * 10 + (s[i] - '0');
    }
    if (idx < 1) throw precondition_error("sigma index must be >= 1");
    return {GenName::Kind::Sigma, idx};
  }
  throw precondition_error("bad generator name '" + s + "'");
}

std::string word_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += gen_name_string(w[i]);
  }
  return out;
}

Word word_from_string(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.push_back(gen_name_from_string(tok));
  return w;
}

} // namespace xsg
