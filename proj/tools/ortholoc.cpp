// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: load or generate finite lattices, run the property
// and locality checker chains, execute the correspondence round trips,
// enumerate small lattices, and export DOT or JSON reports.

#include <atomic>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ortholoc/caps.hpp"
#include "ortholoc/error.hpp"
#include "ortholoc/gf.hpp"
#include "ortholoc/io.hpp"
#include "ortholoc/lattice.hpp"
#include "ortholoc/locality.hpp"
#include "ortholoc/ortho.hpp"

namespace {

using nlohmann::json;
using namespace ortholoc;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string report = "json";
  int jobs = 1;
};

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json j;
  j["kind"] = w->kind;
  j["elements"] = w->elements;
  return j;
}

json outcome_json(const std::optional<CheckOutcome>& o) {
  if (!o) return nullptr;
  json j;
  j["holds"] = o->holds;
  j["witness"] = witness_json(o->witness);
  return j;
}

json triple_json(const std::optional<TripleWitness>& t) {
  if (!t) return nullptr;
  return json::array({t->a, t->b, t->c});
}

void emit(const Options& opt, const json& j,
          const std::string& text_rendering) {
  if (opt.report == "text") {
    std::cout << text_rendering;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const Options& opt, const std::string& path,
              std::vector<std::string> properties) {
  LatticePtr l = read_lattice_file(path);
  if (properties.empty()) {
    properties = {"distributive", "modular",   "cancellation",
                  "modular-cancellation",      "complemented",
                  "sectionally", "relatively", "atomic",
                  "atomistic",   "complete",   "pentagon-free",
                  "diamond-free"};
  }
  CancellationResult cancel = cancellation_laws(*l);
  Complementedness compl_flags = complementedness(*l);
  Atomicity atom_flags = atomicity(*l);

  json props;
  std::string text;
  bool all_hold = true;
  for (const std::string& name : properties) {
    json entry;
    if (name == "distributive") {
      PropertyCheck c = is_distributive(*l);
      entry["holds"] = c.holds;
      entry["witness"] = triple_json(c.witness);
    } else if (name == "modular") {
      PropertyCheck c = is_modular(*l);
      entry["holds"] = c.holds;
      entry["witness"] = triple_json(c.witness);
    } else if (name == "cancellation") {
      entry["holds"] = cancel.cancellation;
      entry["witness"] = triple_json(cancel.cancellation_witness);
    } else if (name == "modular-cancellation") {
      entry["holds"] = cancel.modular_cancellation;
      entry["witness"] = triple_json(cancel.modular_cancellation_witness);
    } else if (name == "complemented") {
      entry["holds"] = compl_flags.complemented;
    } else if (name == "sectionally") {
      entry["holds"] = compl_flags.sectionally;
    } else if (name == "relatively") {
      entry["holds"] = compl_flags.relatively;
    } else if (name == "atomic") {
      entry["holds"] = atom_flags.atomic;
    } else if (name == "atomistic") {
      entry["holds"] = atom_flags.atomistic;
    } else if (name == "complete") {
      entry["holds"] = atom_flags.complete;
    } else if (name == "pentagon-free") {
      auto w = find_forbidden_sublattice(*l, SublatticeKind::pentagon);
      entry["holds"] = !w.has_value();
      if (w) entry["witness"] = w->elements;
    } else if (name == "diamond-free") {
      auto w = find_forbidden_sublattice(*l, SublatticeKind::diamond);
      entry["holds"] = !w.has_value();
      if (w) entry["witness"] = w->elements;
    } else {
      fail(Errc::parse_error, "unknown property: " + name);
    }
    all_hold = all_hold && entry["holds"].get<bool>();
    props[name] = entry;
    text += name + ": " + (entry["holds"].get<bool>() ? "yes" : "no") + "\n";
  }
  json out;
  out["file"] = path;
  out["n"] = l->size();
  out["ok"] = all_hold;
  out["properties"] = props;
  emit(opt, out, text);
  return all_hold ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------
// locality
// ---------------------------------------------------------------------------

bool accumulate(const std::optional<CheckOutcome>& o, bool& all_hold) {
  if (o && !o->holds) all_hold = false;
  return o.has_value();
}

int run_locality(const Options& opt, const std::string& lattice_path,
                 const std::string& relation_path, bool relaxed) {
  LatticePtr l = read_lattice_file(lattice_path);
  LocalityRelation r = read_relation_file(relation_path, l);
  LocalityClass c =
      classify(r, relaxed ? CheckMode::relaxed : CheckMode::chained);

  json out;
  out["lattice"] = lattice_path;
  out["relation"] = relation_path;
  out["mode"] = relaxed ? "relaxed" : "chained";
  out["kernel"] = r.kernel().elements();
  json flags;
  bool all_hold = true;
  flags["poset_locality"] = outcome_json(c.poset_locality);
  flags["lattice_locality"] = outcome_json(c.lattice_locality);
  flags["join_polar"] = c.join_polar ? json(*c.join_polar) : json(nullptr);
  if (c.join_polar && !*c.join_polar) all_hold = false;
  flags["separating"] = outcome_json(c.separating);
  flags["strongly_separating"] = outcome_json(c.strongly_separating);
  flags["nondegenerate"] = outcome_json(c.nondegenerate);
  flags["extreme"] = outcome_json(c.extreme);
  flags["closedness"] = outcome_json(c.closedness);
  flags["closednessweak"] = outcome_json(c.closednessweak);
  accumulate(c.poset_locality, all_hold);
  accumulate(c.lattice_locality, all_hold);
  accumulate(c.separating, all_hold);
  accumulate(c.strongly_separating, all_hold);
  accumulate(c.nondegenerate, all_hold);
  accumulate(c.extreme, all_hold);
  accumulate(c.closedness, all_hold);
  accumulate(c.closednessweak, all_hold);
  out["flags"] = flags;
  out["ok"] = all_hold;

  std::string text;
  for (auto& [key, value] : flags.items()) {
    if (value.is_null()) {
      text += key + ": skipped\n";
    } else if (value.is_boolean()) {
      text += key + ": " + (value.get<bool>() ? "yes" : "no") + "\n";
    } else {
      text += key + ": " +
              (value["holds"].get<bool>() ? std::string("yes")
                                          : std::string("no")) +
              "\n";
    }
  }
  emit(opt, out, text);
  return all_hold ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------
// correspond
// ---------------------------------------------------------------------------

json roundtrip_json(const Poset& p, const RoundtripReport& rep) {
  PosetDigest digest = poset_digest(p);
  json out;
  out["lattice"] = digest.hex;
  out["lattice_canonical"] = digest.canonical;
  out["num_strongly_separating"] = rep.num_strongly_separating;
  out["num_orthocomplementations"] = rep.num_orthocomplementations;
  out["roundtrip_ok"] = rep.ok;
  return out;
}

int run_correspond(const Options& opt, const std::string& path,
                   bool appendix) {
  LatticePtr l = read_lattice_file(path);
  RoundtripReport rep = roundtrip_check(l);
  json out = roundtrip_json(l->poset, rep);
  bool ok = rep.ok;
  if (appendix) {
    AppendixReport ap = check_appendix_correspondences(l);
    json a;
    a["num_qualifying"] = ap.num_qualifying;
    a["num_atom_relations"] = ap.num_atom_relations;
    a["antitone_roundtrip"] = ap.antitone_roundtrip;
    a["sup_inf_duality"] = ap.sup_inf_duality;
    a["atomistic_host"] = ap.atomistic_host;
    a["atom_roundtrip"] = ap.atom_roundtrip;
    a["ok"] = ap.ok;
    out["appendix"] = a;
    ok = ok && ap.ok;
  }
  std::string text = "strongly separating: " +
                     std::to_string(rep.num_strongly_separating) +
                     "\northocomplementations: " +
                     std::to_string(rep.num_orthocomplementations) +
                     "\nroundtrip: " + (rep.ok ? "ok" : "FAILED") + "\n";
  emit(opt, out, text);
  return ok ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

json lattice_report(LatticePtr l, int n, int index, bool with_roundtrip) {
  json entry;
  entry["n"] = n;
  entry["index"] = index;
  entry["canonical"] = to_hex(canonical_form(l->poset));
  entry["distributive"] = is_distributive(*l).holds;
  entry["modular"] = is_modular(*l).holds;
  Complementedness c = complementedness(*l);
  entry["complemented"] = c.complemented;
  Atomicity a = atomicity(*l);
  entry["atomistic"] = a.atomistic;
  RoundtripReport rep = roundtrip_check(l);
  entry["num_strongly_separating"] = rep.num_strongly_separating;
  entry["num_orthocomplementations"] = rep.num_orthocomplementations;
  if (with_roundtrip) entry["roundtrip_ok"] = rep.ok;
  return entry;
}

int run_enumerate(const Options& opt, int max_size, bool with_roundtrip) {
  require(max_size >= 1 && max_size <= enumeration_cap(),
          Errc::size_cap_exceeded,
          "enumeration capped at n <= " + std::to_string(enumeration_cap()));
  bool all_ok = true;
  int total = 0;
  std::vector<int> by_size;
  std::string text;
  json entries = json::array();
  for (int n = 1; n <= max_size; ++n) {
    std::vector<LatticePtr> lattices = enumerate_lattices(n);
    by_size.push_back(static_cast<int>(lattices.size()));
    total += static_cast<int>(lattices.size());
    std::vector<json> reports(lattices.size());
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
      for (std::size_t i = 0; i < lattices.size(); ++i) {
        reports[i] =
            lattice_report(lattices[i], n, static_cast<int>(i), with_roundtrip);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&]() {
          for (std::size_t i = next.fetch_add(1); i < lattices.size();
               i = next.fetch_add(1)) {
            reports[i] = lattice_report(lattices[i], n, static_cast<int>(i),
                                        with_roundtrip);
          }
        });
      }
      for (auto& w : workers) w.join();
    }
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      if (with_roundtrip && !reports[i]["roundtrip_ok"].get<bool>()) {
        all_ok = false;
      }
      entries.push_back(reports[i]);
      text += "n=" + std::to_string(n) + " #" + std::to_string(i) + "\n";
    }
  }
  json out;
  out["lattices"] = entries;
  out["total"] = total;
  out["by_size"] = by_size;
  if (with_roundtrip) out["roundtrips_ok"] = all_ok;
  text += "total: " + std::to_string(total) + "\n";
  emit(opt, out, text);
  return all_ok ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------
// subspace
// ---------------------------------------------------------------------------

BilinearForm parse_form(int q, int n, const std::string& text) {
  if (text == "I") return BilinearForm::identity(q, n);
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded() && j.is_array(), Errc::parse_error,
          "form must be I or a JSON row matrix");
  std::vector<FpVector> rows;
  for (const auto& row : j) {
    require(row.is_array(), Errc::parse_error, "form rows must be arrays");
    rows.push_back(row.get<FpVector>());
  }
  require(static_cast<int>(rows.size()) == n, Errc::dimension_mismatch,
          "form must be n x n");
  return BilinearForm::from_rows(q, rows);
}

std::vector<FpVector> parse_basis(int q, int n, const std::string& text) {
  std::vector<FpVector> out;
  std::string row;
  std::istringstream stream(text);
  while (std::getline(stream, row, ';')) {
    FpVector v;
    std::istringstream row_stream(row);
    std::string cell;
    while (std::getline(row_stream, cell, ',')) {
      v.push_back(std::stoi(cell) % q);
    }
    require(static_cast<int>(v.size()) == n, Errc::dimension_mismatch,
            "basis vector has wrong length");
    out.push_back(std::move(v));
  }
  return out;
}

int run_subspace(const Options& opt, int q, int dim, const std::string& form,
                 const std::string& fixture, const std::string& basis,
                 const std::string& out_dir) {
  SubspaceLatticeModel model = enumerate_subspaces(q, dim);
  VectorLocality v = [&]() {
    if (fixture.empty()) return form_locality(parse_form(q, dim, form));
    require(fixture == "paper", Errc::parse_error,
            "unknown fixture: " + fixture);
    require(q == 2 && dim == 3, Errc::parse_error,
            "the bundled fixture lives on q=2, dim=3");
    return f2_cubed_fixture();
  }();

  LocalityRelation g = vs_to_lattice_locality(v, model);
  Vgv2Report vgv = check_prop_vgv2(v, model);

  json out;
  out["q"] = q;
  out["dim"] = dim;
  out["num_subspaces"] = static_cast<int>(model.subspaces.size());
  std::vector<int> dim_counts(static_cast<std::size_t>(dim) + 1, 0);
  for (const Subspace& s : model.subspaces) {
    ++dim_counts[static_cast<std::size_t>(s.dim())];
  }
  out["subspaces_by_dim"] = dim_counts;
  json labels = json::array();
  for (int i = 0; i < model.lattice->size(); ++i) {
    labels.push_back(model.lattice->poset.label(i));
  }
  out["labels"] = labels;
  out["nondegenerate"] = vgv.degeneracy.nondegenerate;
  out["strongly_nondegenerate"] = vgv.degeneracy.strongly;
  if (vgv.degeneracy.self_related_vector) {
    out["self_related_vector"] =
        decode_vector(q, dim, *vgv.degeneracy.self_related_vector);
  }
  out["equivalences_ok"] = vgv.ok;
  json polar_table = json::array();
  for (int a = 0; a < g.size(); ++a) {
    json row;
    row["element"] = model.lattice->poset.label(a);
    json polars = json::array();
    for (int b : g.polar_of(a).elements()) {
      polars.push_back(model.lattice->poset.label(b));
    }
    row["polar"] = polars;
    polar_table.push_back(row);
  }
  out["polar_table"] = polar_table;

  std::vector<Orthocomplementation> orthos =
      enumerate_orthocomplementations(model.lattice);
  json ortho_list = json::array();
  for (const Orthocomplementation& o : orthos) ortho_list.push_back(o.map());
  out["num_orthocomplementations"] = static_cast<int>(orthos.size());
  out["orthocomplementations"] = ortho_list;

  if (!basis.empty()) {
    std::vector<FpVector> input = parse_basis(q, dim, basis);
    std::vector<FpVector> result = locality_basis_gram_schmidt(v, input);
    json gs;
    gs["input"] = input;
    gs["output"] = result;
    out["gram_schmidt"] = gs;
  }

  if (!out_dir.empty()) {
    std::string lattice_path = out_dir + "/lattice.json";
    std::string relation_path = out_dir + "/relation.json";
    write_text_file(lattice_path, poset_to_json(model.lattice->poset));
    write_text_file(relation_path, relation_to_json(g));
    out["lattice_file"] = lattice_path;
    out["relation_file"] = relation_path;
  }

  std::string text = "subspaces: " +
                     std::to_string(model.subspaces.size()) +
                     "\nnondegenerate: " +
                     (vgv.degeneracy.nondegenerate ? "yes" : "no") +
                     "\nstrongly: " +
                     (vgv.degeneracy.strongly ? "yes" : "no") + "\n";
  emit(opt, out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// export-dot
// ---------------------------------------------------------------------------

int run_export_dot(const std::string& lattice_path,
                   const std::string& out_path) {
  LatticePtr l = read_lattice_file(lattice_path);
  write_text_file(out_path, poset_to_dot(l->poset));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice, locality and orthocomplementation toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--report", opt.report, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);

  std::string lattice_path, relation_path, out_path;
  std::string properties_csv;
  bool relaxed = false, appendix = false, with_roundtrip = false;
  int max_size = 6;
  int q = 2, dim = 2;
  std::string form = "I", fixture, basis, out_dir;

  CLI::App* check = app.add_subcommand("check", "Check lattice properties");
  check->add_option("lattice", lattice_path, "Lattice JSON file")->required();
  check->add_option("--properties", properties_csv,
                    "Comma-separated property list");

  CLI::App* locality =
      app.add_subcommand("locality", "Classify a locality relation");
  locality->add_option("lattice", lattice_path, "Lattice JSON file")
      ->required();
  locality->add_option("relation", relation_path, "Relation JSON file")
      ->required();
  locality->add_flag("--relaxed", relaxed,
                     "Evaluate every definition without the checker chain");

  CLI::App* correspond = app.add_subcommand(
      "correspond", "Round-trip localities and orthocomplementations");
  correspond->add_option("lattice", lattice_path, "Lattice JSON file")
      ->required();
  correspond->add_flag("--appendix", appendix,
                       "Also run the weak correspondences");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Enumerate small lattices");
  enumerate->add_option("--max-size", max_size, "Largest carrier size")
      ->required();
  enumerate->add_flag("--roundtrip", with_roundtrip,
                      "Verify the round trip per lattice");

  CLI::App* subspace =
      app.add_subcommand("subspace", "Subspace lattices over a prime field");
  subspace->add_option("--q", q, "Prime modulus")->required();
  subspace->add_option("--dim", dim, "Ambient dimension")->required();
  subspace->add_option("--form", form, "I or a JSON row matrix");
  subspace->add_option("--fixture", fixture, "Bundled relation name");
  subspace->add_option("--basis", basis,
                       "Semicolon-separated input basis, e.g. 1,1;0,1");
  subspace->add_option("--out-dir", out_dir, "Where to write JSON files");

  CLI::App* export_dot = app.add_subcommand("export-dot", "Write a DOT file");
  export_dot->add_option("lattice", lattice_path, "Lattice JSON file")
      ->required();
  export_dot->add_option("output", out_path, "DOT output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed()) {
      std::vector<std::string> names;
      std::string item;
      std::istringstream stream(properties_csv);
      while (std::getline(stream, item, ',')) {
        if (!item.empty()) names.push_back(item);
      }
      return run_check(opt, lattice_path, names);
    }
    if (locality->parsed()) {
      return run_locality(opt, lattice_path, relation_path, relaxed);
    }
    if (correspond->parsed()) {
      return run_correspond(opt, lattice_path, appendix);
    }
    if (enumerate->parsed()) {
      return run_enumerate(opt, max_size, with_roundtrip);
    }
    if (subspace->parsed()) {
      return run_subspace(opt, q, dim, form, fixture, basis, out_dir);
    }
    if (export_dot->parsed()) {
      return run_export_dot(lattice_path, out_path);
    }
  } catch (const Error& e) {
    json err;
    err["error"] = e.what();
    err["witness"] = e.witness();
    std::cerr << err.dump(2) << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return kExitInputError;
  }
  return kExitInputError;
}
