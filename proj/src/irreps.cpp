#include "grdlog/irreps.hpp"

#include <cstdlib>
#include <deque>
#include <fstream>

#include "grdlog/errors.hpp"
#include "grdlog/hash.hpp"

#include <nlohmann/json.hpp>

namespace grdlog {

namespace {

using nlohmann::json;

constexpr const char* kDataFileName = "s5_generators.json";

FMat parse_matrix(const json& rows, int dim, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw DataFileError("generator data: " + what + " is not a " + std::to_string(dim) + "-row matrix");
  F7Field k;
  FMat m(dim, dim, k.zero());
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw DataFileError("generator data: ragged row in " + what);
    for (int j = 0; j < dim; ++j) {
      const json& v = row[static_cast<size_t>(j)];
      if (!v.is_number_integer()) throw DataFileError("generator data: non-integer entry in " + what);
      m.at(i, j) = F7(v.get<int64_t>());  // reduced mod 7 here
    }
  }
  return m;
}

}  // namespace

std::string default_generator_data_file() {
  if (const char* env = std::getenv("GRDLOG_DATA_FILE"); env && *env) return env;
#ifdef GRDLOG_SOURCE_DATA_DIR
  return std::string(GRDLOG_SOURCE_DATA_DIR) + "/" + kDataFileName;
#else
  return kDataFileName;
#endif
}

uint64_t file_content_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFileError("cannot open data file: " + path);
  uint64_t h = kFnvOffset;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i)
      h = fnv1a64_step(h, static_cast<uint8_t>(buf[i]));
    if (!in) break;
  }
  return h;
}

GeneratorImages load_generator_images(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFileError("cannot open data file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DataFileError("data file " + path + " is not valid JSON: " + e.what());
  }
  if (doc.value("format", "") != "s5-irrep-generators-v1")
    throw DataFileError("data file " + path + ": unknown format tag");
  const json& comps = doc["components"];
  if (!comps.is_array() || comps.size() != 7)
    throw DataFileError("data file " + path + ": expected 7 components");
  GeneratorImages out;
  for (int c = 0; c < 7; ++c) {
    const json& comp = comps[static_cast<size_t>(c)];
    if (comp.value("dim", -1) != kIrrepDims[static_cast<size_t>(c)])
      throw DataFileError("data file " + path + ": component " + std::to_string(c) +
                          " has wrong dimension");
    const std::string label = comp.value("label", "");
    out.w[static_cast<size_t>(c)] = parse_matrix(comp["w"], kIrrepDims[static_cast<size_t>(c)], "w[" + label + "]");
    out.z[static_cast<size_t>(c)] = parse_matrix(comp["z"], kIrrepDims[static_cast<size_t>(c)], "z[" + label + "]");
  }
  return out;
}

IrrepTable IrrepTable::build(const GeneratorImages& gen) {
  const S5& s5 = S5::instance();
  const F7Field k;

  IrrepTable t;
  t.table_.assign(S5::kOrder, DSum7{});
  std::vector<bool> known(S5::kOrder, false);

  DSum7 id;
  for (int c = 0; c < 7; ++c) id[static_cast<size_t>(c)] = FMat::identity(k, kIrrepDims[static_cast<size_t>(c)]);
  const int e = s5.identity_index();
  t.table_[static_cast<size_t>(e)] = id;
  known[static_cast<size_t>(e)] = true;

  const std::array<std::pair<int, const DSum7*>, 2> gens = {
      std::pair<int, const DSum7*>{s5.w_index(), &gen.w},
      std::pair<int, const DSum7*>{s5.z_index(), &gen.z},
  };

  // Right-multiply along the Cayley graph: table[g o s] = table[g] * image(s).
  std::deque<int> frontier{e};
  int reached = 1;
  while (!frontier.empty()) {
    const int g = frontier.front();
    frontier.pop_front();
    for (const auto& [s_idx, s_img] : gens) {
      const int gs = s5.compose(g, s_idx);
      DSum7 prod;
      for (int c = 0; c < 7; ++c)
        prod[static_cast<size_t>(c)] =
            mat_mul(k, t.table_[static_cast<size_t>(g)][static_cast<size_t>(c)], (*s_img)[static_cast<size_t>(c)]);
      if (known[static_cast<size_t>(gs)]) {
        if (!(prod == t.table_[static_cast<size_t>(gs)]))
          throw DataFileError(
              "generator images are inconsistent: BFS closure produced two different images "
              "for one group element (corrupted generator data)");
      } else {
        t.table_[static_cast<size_t>(gs)] = std::move(prod);
        known[static_cast<size_t>(gs)] = true;
        ++reached;
        frontier.push_back(gs);
      }
    }
  }
  if (reached != S5::kOrder)
    throw DataFileError("generator images do not generate the full group (corrupted generator data)");
  return t;
}

const IrrepTable& IrrepTable::standard() {
  static const IrrepTable t = build(load_generator_images(default_generator_data_file()));
  return t;
}

namespace {

// Relations as word pairs over the alphabet W, Z, z (z = Z^-1); an empty
// right side means the identity. Commutator relations are written as
// "the two factors commute" so no inverse convention sneaks in.
struct Relation {
  const char* name;
  const char* lhs;
  const char* rhs;
};

constexpr Relation kRelations[] = {
    {"w^2 = id", "WW", ""},
    {"z^5 = id", "ZZZZZ", ""},
    {"(zw)^4 = id", "ZWZWZWZW", ""},
    {"w z^-1 w z w = z^-1 w z w z^-1 w z", "WzWZW", "zWZWzWZ"},
    {"w commutes with z^-2 w z^2", "WzzWZZ", "zzWZZW"},
    {"w commutes with z^-3 w z^3", "WzzzWZZZ", "zzzWZZZW"},
};

Perm5 eval_word_perm(const char* word) {
  Perm5 acc = Perm5::identity();
  const Perm5 w = perm_w(), z = perm_z(), zi = perm_inverse(perm_z());
  for (const char* p = word; *p; ++p) {
    const Perm5& letter = *p == 'W' ? w : (*p == 'Z' ? z : zi);
    acc = perm_compose(acc, letter);
  }
  return acc;
}

FMat eval_word_mat(const char* word, const FMat& w, const FMat& z, const FMat& zi) {
  const F7Field k;
  FMat acc = FMat::identity(k, w.rows());
  for (const char* p = word; *p; ++p) {
    const FMat& letter = *p == 'W' ? w : (*p == 'Z' ? z : zi);
    acc = mat_mul(k, acc, letter);
  }
  return acc;
}

}  // namespace

bool RelationReport::all_ok() const {
  if (!bfs_closure_ok) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

RelationReport verify_relations(const IrrepTable& table) {
  const S5& s5 = S5::instance();
  const F7Field k;
  RelationReport report;
  report.bfs_closure_ok = true;  // build() would have thrown otherwise

  for (const Relation& rel : kRelations) {
    const Perm5 lhs = eval_word_perm(rel.lhs);
    const Perm5 rhs = *rel.rhs ? eval_word_perm(rel.rhs) : Perm5::identity();
    report.checks.push_back({rel.name, "perm", lhs == rhs});
  }

  const DSum7& w = table.at(s5.w_index());
  const DSum7& z = table.at(s5.z_index());
  for (int c = 0; c < 7; ++c) {
    auto zi = inverse(k, z[static_cast<size_t>(c)]);
    if (!zi) throw InternalError("verify_relations: z image not invertible");
    for (const Relation& rel : kRelations) {
      const FMat lhs = eval_word_mat(rel.lhs, w[static_cast<size_t>(c)], z[static_cast<size_t>(c)], *zi);
      const FMat rhs = *rel.rhs
                           ? eval_word_mat(rel.rhs, w[static_cast<size_t>(c)], z[static_cast<size_t>(c)], *zi)
                           : FMat::identity(k, lhs.rows());
      report.checks.push_back({rel.name, kIrrepLabels[static_cast<size_t>(c)], lhs == rhs});
    }
  }
  return report;
}

CharacterReport character_check(const IrrepTable& table) {
  const S5& s5 = S5::instance();
  CharacterReport report;

  const auto reps = S5::conjugacy_class_representatives();
  for (int c = 0; c < 7; ++c) {
    for (int cls = 0; cls < 7; ++cls) {
      const FMat& m = table.at(reps[static_cast<size_t>(cls)])[static_cast<size_t>(c)];
      F7 tr;
      for (int i = 0; i < m.rows(); ++i) tr += m.at(i, i);
      report.traces[static_cast<size_t>(c)][static_cast<size_t>(cls)] = tr.val();
    }
  }

  report.pairwise_distinct = true;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (report.traces[static_cast<size_t>(i)] == report.traces[static_cast<size_t>(j)]) {
        report.pairwise_distinct = false;
        report.failures.push_back(std::string("trace vectors of components ") + kIrrepLabels[static_cast<size_t>(i)] +
                                  " and " + kIrrepLabels[static_cast<size_t>(j)] + " coincide");
      }

  // Full-group orthogonality sums; valid mod 7 since 7 does not divide 120.
  std::array<std::array<F7, 7>, S5::kOrder> chi;
  for (int g = 0; g < S5::kOrder; ++g)
    for (int c = 0; c < 7; ++c) {
      F7 tr;
      const FMat& m = table.at(g)[static_cast<size_t>(c)];
      for (int i = 0; i < m.rows(); ++i) tr += m.at(i, i);
      chi[static_cast<size_t>(g)][static_cast<size_t>(c)] = tr;
    }
  report.orthogonality_ok = true;
  const F7 group_order_mod7 = F7(S5::kOrder);  // 120 = 1 mod 7
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      F7 sum;
      for (int g = 0; g < S5::kOrder; ++g)
        sum += chi[static_cast<size_t>(g)][static_cast<size_t>(i)] *
               chi[static_cast<size_t>(s5.inverse(g))][static_cast<size_t>(j)];
      const F7 expected = i == j ? group_order_mod7 : F7(0);
      if (!(sum == expected)) {
        report.orthogonality_ok = false;
        report.failures.push_back(std::string("orthogonality fails for (") + kIrrepLabels[static_cast<size_t>(i)] +
                                  ", " + kIrrepLabels[static_cast<size_t>(j)] + ")");
      }
    }
  return report;
}

}  // namespace grdlog
