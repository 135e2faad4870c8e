// Batch front end: parse group/category files, run the bar and nerve
// constructions, validate built objects, and report orbits, homology,
// hom-set counts and canonical decompositions.
//
// Exit codes: 0 success, 1 validation failure, 2 parse error,
// 3 precondition violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "xsg/analysis.hpp"
#include "xsg/constructions.hpp"
#include "xsg/crossed.hpp"
#include "xsg/errors.hpp"
#include "xsg/formats.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw xsg::parse_error(0, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw xsg::parse_error(0, "cannot write file '" + out_path + "'");
  out << text;
}

// One-object groupoid reinterpreted as a group, for twisting a categorical
// nerve by a named element.
xsg::FinGroup group_of_one_object_groupoid(const xsg::DaggerCategory& C) {
  if (C.object_count() != 1)
    throw xsg::precondition_error(
        "a twist element needs a one-object groupoid category");
  xsg::FinGroup G;
  G.name = C.name;
  for (const auto& m : C.morphisms) G.elements.push_back(m.name);
  G.mul = C.comp;
  const xsg::Report r = xsg::validate_group(G);
  if (!r.ok())
    throw xsg::precondition_error(
        "the category is not a one-object groupoid: " + r.issues[0]);
  return G;
}

struct BuildOptions {
  std::string input;
  std::string family_name;
  int max_dim = 0;
  bool twisted = false;
  std::string twist;
  std::string out_path;
};

int run_bar(const BuildOptions& opt) {
  const xsg::FinGroup G = xsg::parse_group(slurp(opt.input));
  const xsg::Family family = xsg::family_from_name(opt.family_name);
  xsg::CrossedSet X;
  if (opt.twisted) {
    const int z = opt.twist.empty() ? xsg::identity_of(G)
                                    : G.index_of(opt.twist);
    if (z < 0)
      throw xsg::precondition_error("unknown twist element '" + opt.twist +
                                    "' in group " + G.name);
    X = xsg::twisted_bar(family, G, z, opt.max_dim);
  } else {
    X = xsg::bar_construction(G, family, opt.max_dim);
  }
  emit(xsg::to_text(X), opt.out_path);
  return 0;
}

int run_nerve(const BuildOptions& opt) {
  const xsg::DaggerCategory C = xsg::parse_category(slurp(opt.input));
  const xsg::Family family = xsg::family_from_name(opt.family_name);
  xsg::CrossedSet X;
  if (opt.twisted) {
    if (!opt.twist.empty()) {
      const xsg::FinGroup G = group_of_one_object_groupoid(C);
      const int z = G.index_of(opt.twist);
      if (z < 0)
        throw xsg::precondition_error("unknown twist element '" + opt.twist +
                                      "' in " + G.name);
      X = xsg::twisted_bar(family, G, z, opt.max_dim);
    } else {
      X = xsg::twisted_categorical_nerve(family, C, opt.max_dim);
    }
  } else {
    switch (family) {
      case xsg::Family::Trivial:
        X = xsg::classical_nerve(C, opt.max_dim);
        break;
      case xsg::Family::Cyclic:
        X = xsg::cyclic_nerve(C, opt.max_dim);
        break;
      case xsg::Family::Dihedral:
        X = xsg::dihedral_nerve(C, opt.max_dim);
        break;
      case xsg::Family::Reflexive:
        X = xsg::restrict_family(xsg::dihedral_nerve(C, opt.max_dim),
                                 xsg::Family::Reflexive);
        break;
      default:
        X = xsg::one_object_nerve(C, family, opt.max_dim);
        break;
    }
  }
  emit(xsg::to_text(X), opt.out_path);
  return 0;
}

int run_verify(const std::string& path) {
  const xsg::CrossedSet X = xsg::parse_crossed_set(slurp(path));
  const xsg::Report r = xsg::validate_truncation(X);
  if (r.ok()) {
    std::cout << "valid " << X.name << "\n";
    return 0;
  }
  std::cout << "invalid " << X.name << "\n";
  std::cout << r.issues[0] << "\n";
  return 1;
}

int run_orbits(const std::string& path, int dim, const std::string& format) {
  const xsg::CrossedSet X = xsg::parse_crossed_set(slurp(path));
  const auto orbits = xsg::orbit_set(X, dim);
  const auto& labels = X.labels[static_cast<std::size_t>(dim)];
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (format == "tsv") {
      std::cout << k << "\t" << orbits[k].size() << "\t";
      for (std::size_t j = 0; j < orbits[k].size(); ++j)
        std::cout << (j ? " " : "") << labels[orbits[k][j]];
      std::cout << "\n";
    } else {
      std::cout << "orbit " << k << ":";
      for (const auto x : orbits[k]) std::cout << " " << labels[x];
      std::cout << "\n";
    }
  }
  if (format != "tsv") std::cout << "orbits " << orbits.size() << "\n";
  return 0;
}

int run_homology(const std::string& path, int max_deg,
                 const std::string& format) {
  const xsg::CrossedSet X = xsg::parse_crossed_set(slurp(path));
  const auto groups = xsg::homology(X, max_deg);
  for (int k = 0; k <= max_deg; ++k) {
    const auto& H = groups[static_cast<std::size_t>(k)];
    std::ostringstream torsion;
    if (H.torsion.empty()) {
      torsion << "-";
    } else {
      for (std::size_t j = 0; j < H.torsion.size(); ++j)
        torsion << (j ? " " : "") << H.torsion[j];
    }
    if (format == "tsv")
      std::cout << k << "\t" << H.free_rank << "\t" << torsion.str() << "\n";
    else
      std::cout << "H" << k << " free " << H.free_rank << " torsion "
                << torsion.str() << "\n";
  }
  return 0;
}

int run_decompose(const std::string& family_name, int degree,
                  const std::string& word_text, int face_index,
                  int degeneracy_index) {
  const xsg::Family family = xsg::family_from_name(family_name);
  const xsg::Word word = xsg::word_from_string(word_text);
  const xsg::SignedPerm g = xsg::evaluate_word(family, word, degree);
  std::cout << "element " << g.to_string() << "\n";
  const xsg::Word canonical = xsg::generator_word(family, g);
  std::cout << "word "
            << (canonical.empty() ? "-" : xsg::word_string(canonical)) << "\n";
  auto print_exchange = [&](xsg::OpKind kind, int i, const char* tag) {
    const auto ex = xsg::operator_exchange(g, kind, i);
    const xsg::Word hw = xsg::generator_word(family, ex.part);
    std::cout << tag << " " << i << " -> " << tag << " " << ex.index
              << " after " << ex.part.to_string() << " word "
              << (hw.empty() ? "-" : xsg::word_string(hw)) << "\n";
  };
  if (face_index >= 0) print_exchange(xsg::OpKind::Face, face_index, "face");
  if (degeneracy_index >= 0)
    print_exchange(xsg::OpKind::Degeneracy, degeneracy_index, "degen");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"seven-family crossed simplicial sets: bar constructions, "
               "nerves, validation, orbits and homology"};
  app.require_subcommand(1);

  BuildOptions bar_opt;
  auto* bar = app.add_subcommand("bar", "bar construction of a group file");
  bar->add_option("--group", bar_opt.input, "group file")->required();
  bar->add_option("--family", bar_opt.family_name, "family name")->required();
  bar->add_option("--max-dim", bar_opt.max_dim, "truncation level")
      ->required();
  bar->add_flag("--twisted", bar_opt.twisted, "twisted nerve levels G^n");
  bar->add_option("--twist", bar_opt.twist, "central twist element");
  bar->add_option("--out", bar_opt.out_path, "output file (default stdout)");

  BuildOptions nerve_opt;
  auto* nerve =
      app.add_subcommand("nerve", "crossed nerve of a category file");
  nerve->add_option("--category", nerve_opt.input, "category file")
      ->required();
  nerve->add_option("--family", nerve_opt.family_name, "family name")
      ->required();
  nerve->add_option("--max-dim", nerve_opt.max_dim, "truncation level")
      ->required();
  nerve->add_flag("--twisted", nerve_opt.twisted, "twisted categorical nerve");
  nerve->add_option("--twist", nerve_opt.twist,
                    "twist element (one-object groupoids)");
  nerve->add_option("--out", nerve_opt.out_path,
                    "output file (default stdout)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "validate a built object file");
  verify->add_option("file", verify_path, "crossed set file")->required();

  std::string orbits_path, orbits_format = "plain";
  int orbits_dim = 0;
  auto* orbits = app.add_subcommand("orbits", "orbit partition of one level");
  orbits->add_option("file", orbits_path, "crossed set file")->required();
  orbits->add_option("--dim", orbits_dim, "level")->required();
  orbits->add_option("--format", orbits_format, "plain or tsv");

  std::string hom_path, hom_format = "plain";
  int hom_deg = 0;
  auto* hom = app.add_subcommand("homology", "integral homology");
  hom->add_option("file", hom_path, "crossed set file")->required();
  hom->add_option("--max-deg", hom_deg, "top degree")->required();
  hom->add_option("--format", hom_format, "plain or tsv");

  std::string count_family;
  int count_m = 0, count_n = 0;
  auto* count = app.add_subcommand("hom-count", "size of Hom([m],[n])");
  count->add_option("--family", count_family, "family name")->required();
  count->add_option("--m", count_m, "source rank")->required();
  count->add_option("--n", count_n, "target rank")->required();

  std::string order_family;
  int order_n = 0;
  auto* order = app.add_subcommand("group-order",
                                   "automorphism group order at degree n");
  order->add_option("--family", order_family, "family name")->required();
  order->add_option("--n", order_n, "degree")->required();

  std::string dec_family, dec_word;
  int dec_n = 0, dec_face = -1, dec_degen = -1;
  auto* dec = app.add_subcommand(
      "decompose", "evaluate a generator word and exchange it past a face "
                   "or degeneracy");
  dec->add_option("--family", dec_family, "family name")->required();
  dec->add_option("--n", dec_n, "degree")->required();
  dec->add_option("--word", dec_word, "generator word, e.g. 'tau omega'")
      ->required();
  dec->add_option("--then-face", dec_face, "face index");
  dec->add_option("--then-degeneracy", dec_degen, "degeneracy index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*bar) return run_bar(bar_opt);
    if (*nerve) return run_nerve(nerve_opt);
    if (*verify) return run_verify(verify_path);
    if (*orbits) return run_orbits(orbits_path, orbits_dim, orbits_format);
    if (*hom) return run_homology(hom_path, hom_deg, hom_format);
    if (*count) {
      std::cout << xsg::hom_set(xsg::family_from_name(count_family), count_m,
                                count_n)
                       .size()
                << "\n";
      return 0;
    }
    if (*order) {
      std::cout << xsg::closure_order(xsg::family_from_name(order_family),
                                      order_n)
                << "\n";
      return 0;
    }
    if (*dec)
      return run_decompose(dec_family, dec_n, dec_word, dec_face, dec_degen);
  } catch (const xsg::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const xsg::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
