#include "wtab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "wtab/enumerate.hpp"
#include "wtab/frames.hpp"
#include "wtab/json_io.hpp"
#include "wtab/perm.hpp"
#include "wtab/render.hpp"
#include "wtab/rs.hpp"
#include "wtab/sgnperm.hpp"
#include "wtab/stables.hpp"
#include "wtab/swaps.hpp"

namespace wtab {

namespace {

enum class Format { Json, Ascii };

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json load_json(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return parse_json(arg);
  std::ifstream in(arg);
  if (!in) throw JsonError("cannot read file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const JsonError& e) {
    throw JsonError(arg + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::stringstream in(text);
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" []()");
    auto e = tok.find_last_not_of(" []()");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<Entry> parse_alphabet(const std::string& alphabet, const std::string& range) {
  if (!alphabet.empty()) return row_from_json(load_json(alphabet));
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("give --alphabet '[...]' or --range lo..hi");
  int lo = std::stoi(range.substr(0, dots));
  int hi = std::stoi(range.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range " + range);
  return integer_alphabet(lo, hi);
}

// "σ,B": split at the first comma outside brackets and braces.
std::pair<std::string, std::string> split_label(const std::string& arg) {
  int depth = 0;
  for (std::size_t i = 0; i < arg.size(); ++i) {
    char c = arg[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) return {arg.substr(0, i), arg.substr(i + 1)};
  }
  throw std::invalid_argument("expected 'sigma,TABLE', got '" + arg + "'");
}

class Runner {
public:
  Runner(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}

  int emit(const Json& j, const std::string& ascii) {
    if (fmt_ == Format::Json) {
      out_ << dump(j) << '\n';
    } else {
      out_ << ascii;
      if (!ascii.empty() && ascii.back() != '\n') out_ << '\n';
    }
    return kExitOk;
  }

  int undefined() {
    out_ << (fmt_ == Format::Json ? "\"undefined\"" : "undefined") << '\n';
    return kExitUndefined;
  }

  int emit(const Table& t) { return emit(to_json(t), render(t)); }
  int emit(const STable& t) { return emit(to_json(t), render(t)); }

private:
  std::ostream& out_;
  Format fmt_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// The "kind" field, or a guess from the document's shape.
std::string kind_of(const Json& j) {
  if (!j.is_object()) return "";
  if (j.contains("kind") && j.at("kind").is_string()) return j.at("kind").get<std::string>();
  if (j.contains("half_rows")) return "stable";
  if (j.contains("rows") && j.at("rows").is_array() && !j.at("rows").empty() &&
      j.at("rows").front().is_object())
    return "frame";
  return "table";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wtab: tables, row swaps and component group actions for finite W-algebra "
               "highest weight theories"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "ascii"}))
      ->capture_default_str();

  std::string table_arg, frame_arg, perm_arg, sigma_arg, list_arg, w_arg, phi_arg;
  std::string a_arg, b_arg, alphabet_arg, range_arg, partition_arg, pairs_arg, word_arg;
  std::string type_arg = "A";
  int k = 0;
  bool fd_flag = false, sorted_flag = false, single_coset_flag = false, count_flag = false;

  auto* validate = app.add_subcommand("validate", "Check a frame, s-frame, table or s-table");
  validate->add_option("--frame,--table", frame_arg, "JSON document or path")->required();

  auto* rs = app.add_subcommand("rs", "Robinson-Schensted tableau of a table or word");
  auto* rs_src = rs->add_option_group("source");
  rs_src->add_option("--table", table_arg, "JSON table or path");
  rs_src->add_option("--word", word_arg, "JSON array of entries");
  rs_src->require_option(1);

  auto* swap = app.add_subcommand("swap", "Row swap s_k (or s-bar_k for an s-table)");
  swap->add_option("--table", table_arg)->required();
  swap->add_option("--k", k)->required();

  auto* star = app.add_subcommand("star", "Star action of a permutation on a table");
  star->add_option("--perm", perm_arg, "Cycle notation, e.g. \"(1 2 3)\"")->required();
  star->add_option("--table", table_arg)->required();

  auto* fd = app.add_subcommand("fd", "Finite-dimensionality of a type A label");
  fd->add_option("--type", type_arg)->check(CLI::IsMember({"A"}))->capture_default_str();
  fd->add_option("--table", table_arg)->required();
  fd->add_option("--sigma", sigma_arg, "Cycle notation; identity by default");

  auto* iso = app.add_subcommand("iso", "Isomorphism of two labels \"sigma,TABLE\"");
  iso->add_option("--a", a_arg)->required();
  iso->add_option("--b", b_arg)->required();

  auto* sharp = app.add_subcommand("sharp", "Sharp element of a list");
  sharp->add_option("--list", list_arg, "JSON array of entries")->required();

  auto* orbit = app.add_subcommand("orbit", "Component group orbit of an s-table");
  orbit->add_option("--table", table_arg)->required();

  auto* wstar = app.add_subcommand("wstar", "Star action of a signed permutation on an s-table");
  wstar->add_option("--w", w_arg, "Cycles \"(1 -2)(2 -1)\" or a word \"r s1 r\"")->required();
  wstar->add_option("--table", table_arg)->required();

  auto* sfd = app.add_subcommand("sfd", "Finite-dimensionality of an s-table label");
  sfd->add_option("--phi", phi_arg, "Overrides the table's sign");
  sfd->add_option("--table", table_arg)->required();
  sfd->add_option("--sigma", sigma_arg, "Signed permutation; identity by default");

  auto* enumerate = app.add_subcommand("enumerate", "List tables on a frame");
  auto* shape = enumerate->add_option_group("shape");
  shape->add_option("--frame", frame_arg, "Frame or s-frame JSON");
  shape->add_option("--partition", partition_arg, "Pyramid, e.g. \"2,1\"");
  shape->add_option("--pairs", pairs_arg, "Symmetric pyramid of p_1^2..p_r^2, e.g. \"3,2\"");
  shape->require_option(1);
  enumerate->add_option("--alphabet", alphabet_arg, "JSON array of entries");
  enumerate->add_option("--range", range_arg, "Integers lo..hi");
  enumerate->add_option("--phi", phi_arg, "Sign for s-tables");
  enumerate->add_option("--sigma", sigma_arg, "Row permutation of the pyramid");
  enumerate->add_flag("--fd", fd_flag, "Only finite-dimensional labels");
  enumerate->add_flag("--sorted", sorted_flag, "Only weakly increasing rows");
  enumerate->add_flag("--single-coset", single_coset_flag, "Only pairwise comparable entries");
  enumerate->add_flag("--count", count_flag, "Print the count only");

  auto* render_cmd = app.add_subcommand("render", "ASCII picture of a frame or table");
  render_cmd->add_option("--table,--frame", table_arg)->required();

  auto* weyl = app.add_subcommand("weyl", "Restricted Weyl group data");
  weyl->add_option("--pairs", pairs_arg, "p_1,...,p_r for p_1^2..p_r^2")->required();
  weyl->add_option("--phi", phi_arg)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  Runner run(out, format == "ascii" ? Format::Ascii : Format::Json);
  try {
    if (*validate) {
      Json j = load_json(frame_arg);
      std::string kind = kind_of(j);
      std::string pic;
      try {
        if (kind == "frame") pic = render(frame_from_json(j));
        else if (kind == "sframe") pic = render(sframe_from_json(j).full());
        else if (kind == "stable") pic = render(stable_from_json(j));
        else pic = render(table_from_json(j));
      } catch (const FrameError& e) {
        run.emit(Json{{"valid", false}, {"error", e.what()}, {"box", {{"x", e.x()}, {"y", e.y()}}}},
                 std::string("invalid: ") + e.what() + " (box at x=" + std::to_string(e.x()) +
                     ", y=" + std::to_string(e.y()) + ")");
        return kExitInvalid;
      }
      return run.emit(Json{{"valid", true}}, pic);
    }
    if (*rs) {
      Tableau t;
      if (!table_arg.empty()) {
        auto any = any_table_from_json(load_json(table_arg));
        if (auto* a = std::get_if<Table>(&any)) t = rs_class(RowClass(*a));
        else t = rs_class(RowClass(std::get<STable>(any).full()));
      } else {
        Row w = row_from_json(load_json(word_arg));
        t = rs_tableau(w);
      }
      Json rows = Json::array();
      for (const auto& r : t.rows) {
        Json jr = Json::array();
        for (const auto& e : r) jr.push_back(to_json(e));
        rows.push_back(jr);
      }
      return run.emit(Json{{"kind", "tableau"}, {"rows", rows}, {"shape", t.shape().parts}},
                      render(t));
    }
    if (*swap) {
      auto any = any_table_from_json(load_json(table_arg));
      if (auto* a = std::get_if<Table>(&any)) {
        SwapResult r = swap_adjacent(RowClass(*a), k);
        return r ? run.emit(r->table()) : run.undefined();
      }
      STableResult r = sbar_star(std::get<STable>(any), k);
      return r ? run.emit(*r) : run.undefined();
    }
    if (*star) {
      Table a = table_from_json(load_json(table_arg));
      SwapResult r = star_act(Perm::parse(perm_arg, a.num_rows()), RowClass(a));
      return r ? run.emit(r->table()) : run.undefined();
    }
    if (*fd) {
      Table a = table_from_json(load_json(table_arg));
      Perm sigma = sigma_arg.empty() ? Perm(a.num_rows()) : Perm::parse(sigma_arg, a.num_rows());
      FdReport r = fd_typeA_report(RowClass(a), sigma);
      return run.emit(Json{{"finite_dimensional", r.finite_dimensional},
                           {"rs_shape_matches", r.rs_shape_matches}},
                      "finite dimensional: " + yes_no(r.finite_dimensional) +
                          "\nRS shape equals the partition: " + yes_no(r.rs_shape_matches));
    }
    if (*iso) {
      auto [s1, t1] = split_label(a_arg);
      auto [s2, t2] = split_label(b_arg);
      auto b1 = any_table_from_json(load_json(t1));
      auto b2 = any_table_from_json(load_json(t2));
      bool same;
      if (std::holds_alternative<Table>(b1) && std::holds_alternative<Table>(b2)) {
        const Table& x = std::get<Table>(b1);
        const Table& y = std::get<Table>(b2);
        same = iso_typeA(Perm::parse(s1, x.num_rows()), RowClass(x), Perm::parse(s2, y.num_rows()),
                         RowClass(y));
      } else if (std::holds_alternative<STable>(b1) && std::holds_alternative<STable>(b2)) {
        const STable& x = std::get<STable>(b1);
        const STable& y = std::get<STable>(b2);
        same = iso_evenmult(SignedPerm::parse(s1, x.rank()), x, SignedPerm::parse(s2, y.rank()), y);
      } else {
        throw std::invalid_argument("both labels must be tables or both s-tables");
      }
      return run.emit(Json{{"isomorphic", same}}, "isomorphic: " + yes_no(same));
    }
    if (*sharp) {
      Row xs = row_from_json(load_json(list_arg));
      auto s = sharp_element(xs);
      return s ? run.emit(to_json(*s), s->to_string()) : run.undefined();
    }
    if (*orbit) {
      STable a = stable_from_json(load_json(table_arg));
      Json members = Json::array();
      std::string pics;
      for (const auto& b : component_orbit(a)) {
        members.push_back(to_json(b));
        pics += (pics.empty() ? "" : "\n") + render(b);
      }
      std::size_t n = members.size();
      return run.emit(Json{{"kind", "orbit"}, {"members", members}, {"size", n}}, pics);
    }
    if (*wstar) {
      STable a = stable_from_json(load_json(table_arg));
      STableResult r = wstar_act(SignedPerm::parse(w_arg, a.rank()), a);
      return r ? run.emit(*r) : run.undefined();
    }
    if (*sfd) {
      STable a = stable_from_json(load_json(table_arg));
      if (!phi_arg.empty()) a = STable(a.frame(), a.half_rows(), parse_phi(phi_arg));
      SignedPerm sigma = sigma_arg.empty() ? SignedPerm(a.rank()) : SignedPerm::parse(sigma_arg, a.rank());
      bool r = is_fd_evenmult(a, sigma);
      return run.emit(Json{{"finite_dimensional", r}}, "finite dimensional: " + yes_no(r));
    }
    if (*enumerate) {
      std::vector<Entry> alphabet = parse_alphabet(alphabet_arg, range_arg);
      bool stables = !pairs_arg.empty();
      std::optional<Json> fj;
      if (!frame_arg.empty()) {
        fj = load_json(frame_arg);
        stables = fj->is_object() && fj->contains("kind") && fj->at("kind") == "sframe";
      }
      Json list = Json::array();
      std::string pics;
      std::size_t n = 0;
      if (stables) {
        if (phi_arg.empty()) throw std::invalid_argument("--phi is required for s-tables");
        SFrame f = fj ? sframe_from_json(*fj) : symmetric_pyramid(parse_int_list(pairs_arg));
        STableFilter filter;
        filter.weakly_increasing = sorted_flag;
        if (!sigma_arg.empty() && !fj) {
          SignedPerm s = SignedPerm::parse(sigma_arg, f.rank());
          f = act_rows(s, f);
        }
        if (fd_flag)
          filter.fd_sigma = sigma_arg.empty() ? SignedPerm(f.rank()) : SignedPerm::parse(sigma_arg, f.rank());
        for (const auto& t : enumerate_stables(f, parse_phi(phi_arg), alphabet, filter)) {
          ++n;
          if (count_flag) continue;
          list.push_back(to_json(t));
          pics += (pics.empty() ? "" : "\n") + render(t);
        }
      } else {
        Frame f = fj ? frame_from_json(*fj) : pyramid(Partition(parse_int_list(partition_arg)));
        TableFilter filter;
        filter.row_classes_only = sorted_flag;
        filter.single_coset = single_coset_flag;
        if (!sigma_arg.empty() && !fj) f = permute_rows(f, Perm::parse(sigma_arg, f.num_rows()));
        if (fd_flag)
          filter.fd_sigma = sigma_arg.empty() ? Perm(f.num_rows()) : Perm::parse(sigma_arg, f.num_rows());
        for (const auto& t : enumerate_tables(f, alphabet, filter)) {
          ++n;
          if (count_flag) continue;
          list.push_back(to_json(t));
          pics += (pics.empty() ? "" : "\n") + render(t);
        }
      }
      if (count_flag) return run.emit(Json{{"count", n}}, std::to_string(n));
      return run.emit(Json{{"count", n}, {"tables", list}}, pics);
    }
    if (*render_cmd) {
      Json j = load_json(table_arg);
      std::string kind = kind_of(j);
      std::string pic;
      if (kind == "frame") pic = render(frame_from_json(j));
      else if (kind == "sframe") pic = render(sframe_from_json(j).full());
      else if (kind == "stable") pic = render(stable_from_json(j));
      else pic = render(table_from_json(j));
      out << pic;
      return kExitOk;
    }
    if (*weyl) {
      RestrictedWeylData d = restricted_weyl_data(parse_int_list(pairs_arg), parse_phi(phi_arg));
      Json factors = Json::array();
      std::ostringstream txt;
      txt << "component group: Z_2^" << d.group.d() << "\n";
      for (const auto& f : d.factors) {
        factors.push_back({{"part", f.part},
                           {"multiplicity", f.multiplicity},
                           {"phi_odd", f.phi_odd},
                           {"identity_component_type", f.phi_odd ? "D" : "B"}});
        txt << "part " << f.part << ": W_" << f.multiplicity << ", identity component of type "
            << (f.phi_odd ? "D" : "B") << "\n";
      }
      Json rules = Json::array();
      for (const auto& r : d.rules) {
        rules.push_back({{"label", r.label}, {"length", r.length}, {"c_index", r.c_index}});
        txt << "r_" << r.label << " (length " << r.length << "): "
            << (r.c_index ? "acts as c_" + std::to_string(r.c_index) : std::string("trivial"))
            << "\n";
      }
      return run.emit(Json{{"d", d.group.d()},
                           {"odd_parts", d.group.odd_parts},
                           {"factors", factors},
                           {"z_generators", d.z_generators},
                           {"rules", rules}},
                      txt.str());
    }
  } catch (const FrameError& e) {
    err << "error: " << e.what() << " (box at x=" << e.x() << ", y=" << e.y() << ")\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace wtab
