#pragma once

// JSON input files (semilattice instances, cover systems, presentations,
// orbit models) and JSON renderings of the reports.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "indres/chain_complex.hpp"
#include "indres/integer.hpp"
#include "indres/integer_matrix.hpp"
#include "indres/mu.hpp"
#include "indres/orbit_model.hpp"
#include "indres/presentation.hpp"
#include "indres/resolution.hpp"
#include "indres/semilattice.hpp"

namespace indres {

  using Json = nlohmann::json;

  inline Json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path + ": cannot open file");
    }
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  namespace detail {

    inline Json const& field(Json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(where + ": missing \"" + key + "\"");
      }
      return j.at(key);
    }

    inline std::string text(Json const& j, std::string const& where) {
      if (!j.is_string()) {
        throw ParseError(where + ": expected a string");
      }
      return j.get<std::string>();
    }

    inline Json const& array(Json const& j, std::string const& where,
                             std::optional<std::size_t> size = std::nullopt) {
      if (!j.is_array()) {
        throw ParseError(where + ": expected an array");
      }
      if (size && j.size() != *size) {
        throw ParseError(where + ": expected " + std::to_string(*size) + " entries");
      }
      return j;
    }

    inline std::vector<std::string> labels(Json const& j, std::string const& where) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      for (auto const& x : array(j, where)) {
        out.push_back(text(x, where + "[" + std::to_string(i++) + "]"));
      }
      return out;
    }

    inline Integer integer(Json const& j, std::string const& where) {
      if (j.is_number_integer()) {
        return Integer(j.get<long long>());
      }
      if (j.is_string()) {
        try {
          return Integer(j.get<std::string>());
        } catch (std::exception const&) {
        }
      }
      throw ParseError(where + ": expected an integer");
    }

    inline Json integer_json(Integer const& x) {
      if (fits_int64(x)) {
        return static_cast<long long>(x);
      }
      return x.str();
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////////
  // Semilattice instances
  ////////////////////////////////////////////////////////////////////////////

  struct SemilatticeInstance {
    SemilatticePtr             E;
    GroupAction                action;
    std::optional<CoverSystem> covers;
  };

  inline Element lookup(FiniteSemilattice const& E, Json const& j, std::string const& where) {
    std::string const lbl = detail::text(j, where);
    if (auto e = E.find(lbl)) {
      return *e;
    }
    throw ParseError(where + ": unknown element \"" + lbl + "\"");
  }

  // {"covers": {label: [[member, ...], ...]}}
  inline CoverSystem parse_covers(Json const& j, SemilatticePtr const& E, std::string const& where) {
    CoverSystem R(E);
    Json const& covers = detail::field(j, "covers", where);
    if (!covers.is_object()) {
      throw ParseError(where + ".covers: expected an object");
    }
    for (auto const& [lbl, list] : covers.items()) {
      std::string const at = where + ".covers." + lbl;
      auto const        e  = E->find(lbl);
      if (!e) {
        throw ParseError(at + ": unknown element");
      }
      std::size_t c = 0;
      for (auto const& cover : detail::array(list, at)) {
        std::string const cat = at + "[" + std::to_string(c++) + "]";
        MemberSet         members;
        std::size_t       m = 0;
        for (auto const& f : detail::array(cover, cat)) {
          members.push_back(lookup(*E, f, cat + "[" + std::to_string(m++) + "]"));
        }
        try {
          R.add(*e, std::move(members));
        } catch (DomainError const& err) {
          throw ParseError(cat + ": " + err.what());
        }
      }
    }
    return R;
  }

  // {"elements": [...,"0"], "product": [[a,b,ab], ...], "action": {...},
  //  "covers": {...}}. Products with 0, squares and mirrored pairs may be
  // omitted.
  inline SemilatticeInstance parse_semilattice(Json const& j, std::string const& where = "$") {
    auto const  labels = detail::labels(detail::field(j, "elements", where), where + ".elements");
    auto const  zero_it = std::find(labels.begin(), labels.end(), "0");
    if (zero_it == labels.end()) {
      throw ParseError(where + ".elements: the zero \"0\" is missing");
    }
    std::size_t const N    = labels.size();
    Element const     zero = static_cast<Element>(zero_it - labels.begin());
    std::vector<std::optional<Element>> table(N * N);
    auto find = [&](Json const& x, std::string const& at) {
      std::string const lbl = detail::text(x, at);
      auto              it  = std::find(labels.begin(), labels.end(), lbl);
      if (it == labels.end()) {
        throw ParseError(at + ": unknown element \"" + lbl + "\"");
      }
      return static_cast<Element>(it - labels.begin());
    };
    auto put = [&](Element a, Element b, Element c, std::string const& at) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        auto& slot = table[x * N + y];
        if (slot && *slot != c) {
          throw ParseError(at + ": conflicting product for (" + labels[x] + ", "
                           + labels[y] + ")");
        }
        slot = c;
      }
    };
    std::size_t i = 0;
    for (auto const& row : detail::array(detail::field(j, "product", where), where + ".product")) {
      std::string const at = where + ".product[" + std::to_string(i++) + "]";
      detail::array(row, at, 3);
      put(find(row[0], at + "[0]"), find(row[1], at + "[1]"), find(row[2], at + "[2]"), at);
    }
    for (Element a = 0; a < N; ++a) {
      put(a, a, a == zero ? zero : a, where + ".product");
      put(a, zero, zero, where + ".product");
    }
    std::vector<Element> full(N * N);
    for (Element a = 0; a < N; ++a) {
      for (Element b = 0; b < N; ++b) {
        if (!table[a * N + b]) {
          throw ParseError(where + ".product: missing product of (" + labels[a] + ", "
                           + labels[b] + ")");
        }
        full[a * N + b] = *table[a * N + b];
      }
    }
    SemilatticePtr E;
    try {
      E = std::make_shared<FiniteSemilattice>(labels, zero, std::move(full));
    } catch (DomainError const& err) {
      throw ParseError(where + ": " + err.what());
    }

    std::optional<GroupAction> action;
    if (j.contains("action")) {
      std::string const at     = where + ".action";
      Json const&       a      = j.at("action");
      auto const        group  = detail::labels(detail::field(a, "group", at), at + ".group");
      std::size_t const m      = group.size();
      auto gfind = [&](Json const& x, std::string const& w) {
        std::string const lbl = detail::text(x, w);
        auto              it  = std::find(group.begin(), group.end(), lbl);
        if (it == group.end()) {
          throw ParseError(w + ": unknown group element \"" + lbl + "\"");
        }
        return static_cast<GroupElement>(it - group.begin());
      };
      std::vector<std::vector<std::optional<Element>>> tau(m, std::vector<std::optional<Element>>(N));
      std::size_t t = 0;
      for (auto const& row : detail::array(detail::field(a, "tau", at), at + ".tau")) {
        std::string const w = at + ".tau[" + std::to_string(t++) + "]";
        detail::array(row, w, 3);
        tau[gfind(row[0], w + "[0]")][find(row[1], w + "[1]")] = find(row[2], w + "[2]");
      }
      std::vector<std::vector<Element>> tau_full(m, std::vector<Element>(N));
      for (GroupElement g = 0; g < m; ++g) {
        for (Element e = 0; e < N; ++e) {
          if (e == zero && !tau[g][e]) {
            tau[g][e] = zero;
          }
          if (!tau[g][e]) {
            throw ParseError(at + ".tau: missing image of " + labels[e] + " under " + group[g]);
          }
          tau_full[g][e] = *tau[g][e];
        }
      }
      try {
        if (a.contains("multiplication")) {
          std::vector<std::optional<GroupElement>> mult(m * m);
          std::size_t r = 0;
          for (auto const& row : detail::array(a.at("multiplication"), at + ".multiplication")) {
            std::string const w = at + ".multiplication[" + std::to_string(r++) + "]";
            detail::array(row, w, 3);
            mult[gfind(row[0], w + "[0]") * m + gfind(row[1], w + "[1]")] = gfind(row[2], w + "[2]");
          }
          std::vector<GroupElement> mfull(m * m);
          for (std::size_t x = 0; x < m * m; ++x) {
            if (!mult[x]) {
              throw ParseError(at + ".multiplication: missing product of " + group[x / m]
                               + " and " + group[x % m]);
            }
            mfull[x] = *mult[x];
          }
          action.emplace(E, group, std::move(mfull), std::move(tau_full));
        } else {
          action.emplace(GroupAction::from_permutations(E, group, std::move(tau_full)));
        }
      } catch (DomainError const& err) {
        throw ParseError(at + ": " + err.what());
      }
    } else {
      action.emplace(GroupAction::trivial(E));
    }

    SemilatticeInstance out{E, std::move(*action), std::nullopt};
    if (j.contains("covers")) {
      out.covers = parse_covers(j, E, where);
    }
    return out;
  }

  inline Json covers_json(CoverSystem const& R) {
    FiniteSemilattice const& E = *R.semilattice();
    Json                     covers = Json::object();
    for (Element e : E.nonzero()) {
      if (R.covers(e).empty()) {
        continue;
      }
      Json list = Json::array();
      for (auto const& cover : R.covers(e)) {
        Json members = Json::array();
        for (Element f : cover) {
          members.push_back(E.label(f));
        }
        list.push_back(std::move(members));
      }
      covers[E.label(e)] = std::move(list);
    }
    return covers;
  }

  // The inverse of parse_semilattice (with every product listed).
  inline Json semilattice_json(FiniteSemilattice const& E,
                               GroupAction const*       action = nullptr,
                               CoverSystem const*       covers = nullptr) {
    Json j;
    j["elements"] = E.labels();
    Json product  = Json::array();
    for (Element a = 0; a < E.size(); ++a) {
      for (Element b = a; b < E.size(); ++b) {
        if (a == E.zero() || b == E.zero() || a == b) {
          continue;
        }
        product.push_back(Json::array({E.label(a), E.label(b), E.label(E.product(a, b))}));
      }
    }
    j["product"] = std::move(product);
    if (action != nullptr && action->order() > 1) {
      Json a;
      a["group"] = action->labels();
      Json tau   = Json::array();
      Json mult  = Json::array();
      for (GroupElement g = 0; g < action->order(); ++g) {
        for (Element e : E.nonzero()) {
          tau.push_back(Json::array({action->label(g), E.label(e), E.label(action->apply(g, e))}));
        }
        for (GroupElement h = 0; h < action->order(); ++h) {
          mult.push_back(Json::array(
              {action->label(g), action->label(h), action->label(action->multiply(g, h))}));
        }
      }
      a["tau"]            = std::move(tau);
      a["multiplication"] = std::move(mult);
      j["action"]         = std::move(a);
    }
    if (covers != nullptr) {
      j["covers"] = covers_json(*covers);
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Presentations and orbit models
  ////////////////////////////////////////////////////////////////////////////

  // {"alphabet": [...], "sigma": [[[a,b],[c,d]], ...]} listing every pair.
  inline SigmaMap parse_presentation(Json const& j, std::string const& where = "$") {
    auto const alphabet = detail::labels(detail::field(j, "alphabet", where), where + ".alphabet");
    std::size_t const n = alphabet.size();
    if (n == 0) {
      throw ParseError(where + ".alphabet: empty");
    }
    auto find = [&](Json const& x, std::string const& at) {
      std::string const lbl = detail::text(x, at);
      auto              it  = std::find(alphabet.begin(), alphabet.end(), lbl);
      if (it == alphabet.end()) {
        throw ParseError(at + ": unknown letter \"" + lbl + "\"");
      }
      return static_cast<Letter>(it - alphabet.begin());
    };
    std::vector<std::optional<SigmaMap::Pair>> table(n * n);
    std::size_t                                i = 0;
    for (auto const& row : detail::array(detail::field(j, "sigma", where), where + ".sigma")) {
      std::string const at = where + ".sigma[" + std::to_string(i++) + "]";
      detail::array(row, at, 2);
      detail::array(row[0], at + "[0]", 2);
      detail::array(row[1], at + "[1]", 2);
      Letter const a = find(row[0][0], at + "[0][0]");
      Letter const b = find(row[0][1], at + "[0][1]");
      auto&        slot = table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
      if (slot) {
        throw ParseError(at + ": pair (" + alphabet[static_cast<std::size_t>(a)] + ","
                         + alphabet[static_cast<std::size_t>(b)] + ") listed twice");
      }
      slot = SigmaMap::Pair{find(row[1][0], at + "[1][0]"), find(row[1][1], at + "[1][1]")};
    }
    std::vector<SigmaMap::Pair> full;
    for (std::size_t x = 0; x < n * n; ++x) {
      if (!table[x]) {
        throw ParseError(where + ".sigma: missing pair (" + alphabet[x / n] + ","
                         + alphabet[x % n] + ")");
      }
      full.push_back(*table[x]);
    }
    try {
      return SigmaMap(alphabet, std::move(full));
    } catch (DomainError const& err) {
      throw ParseError(where + ": " + err.what());
    }
  }

  inline Json presentation_json(SigmaMap const& s) {
    Json j;
    j["alphabet"] = s.alphabet();
    Json sigma    = Json::array();
    for (Letter a = 0; a < static_cast<Letter>(s.size()); ++a) {
      for (Letter b = 0; b < static_cast<Letter>(s.size()); ++b) {
        auto const [c, d] = s.at(a, b);
        sigma.push_back(Json::array({Json::array({s.label(a), s.label(b)}),
                                     Json::array({s.label(c), s.label(d)})}));
      }
    }
    j["sigma"] = std::move(sigma);
    return j;
  }

  inline Json matrix_json(IntMatrix const& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json data = Json::array();
    for (auto const& x : m.data()) {
      data.push_back(detail::integer_json(x));
    }
    j["data"] = std::move(data);
    return j;
  }

  inline IntMatrix parse_square_matrix(Json const& j, std::size_t b, std::string const& where) {
    detail::array(j, where, b);
    IntMatrix m(b, b);
    for (std::size_t r = 0; r < b; ++r) {
      std::string const at = where + "[" + std::to_string(r) + "]";
      detail::array(j[r], at, b);
      for (std::size_t c = 0; c < b; ++c) {
        m(r, c) = detail::integer(j[r][c], at + "[" + std::to_string(c) + "]");
      }
    }
    return m;
  }

  // {"n": 2, "orbits": ["P"], "M": [[[1]], [[1]]], "sharp": [[1,2,2], [2,1,1]]}
  // with sharp rows [i, j, i#j].
  inline OrbitModel parse_orbit_model(Json const& j, std::string const& where = "$") {
    Json const& nj = detail::field(j, "n", where);
    if (!nj.is_number_integer() || nj.get<long long>() < 1 || nj.get<long long>() > 16) {
      throw ParseError(where + ".n: expected an integer in 1..16");
    }
    int const  n      = nj.get<int>();
    auto const orbits = detail::labels(detail::field(j, "orbits", where), where + ".orbits");
    std::vector<IntMatrix> M;
    Json const& mj = detail::array(detail::field(j, "M", where), where + ".M",
                                   static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < mj.size(); ++i) {
      M.push_back(parse_square_matrix(mj[i], orbits.size(), where + ".M[" + std::to_string(i) + "]"));
    }
    SharpTable  t(n);
    std::size_t r = 0;
    for (auto const& row : detail::array(detail::field(j, "sharp", where), where + ".sharp")) {
      std::string const at = where + ".sharp[" + std::to_string(r++) + "]";
      detail::array(row, at, 3);
      for (std::size_t x = 0; x < 3; ++x) {
        if (!row[x].is_number_integer()) {
          throw ParseError(at + ": expected integers");
        }
      }
      try {
        t.set(row[0].get<int>(), row[1].get<int>(), row[2].get<int>());
      } catch (DomainError const& err) {
        throw ParseError(at + ": " + err.what());
      }
    }
    try {
      return OrbitModel(orbits, std::move(M), std::move(t));
    } catch (DomainError const& err) {
      throw ParseError(where + ": " + err.what());
    }
  }

  inline Json sharp_json(SharpTable const& t) {
    Json rows = Json::array();
    for (int i = 1; i <= t.n(); ++i) {
      for (int j = 1; j <= t.n(); ++j) {
        if (i != j) {
          rows.push_back(Json::array({i, j, t.at(i, j)}));
        }
      }
    }
    return rows;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////////

  inline Json homology_json(std::vector<HomologyGroup> const& hs) {
    Json out = Json::array();
    for (std::size_t k = 0; k < hs.size(); ++k) {
      Json t = Json::array();
      for (auto const& d : hs[k].torsion) {
        t.push_back(detail::integer_json(d));
      }
      out.push_back({{"degree", k}, {"free_rank", hs[k].free_rank}, {"torsion", std::move(t)}});
    }
    return out;
  }

  inline Json complex_json(ChainComplex const& cx) {
    Json ranks = Json::array();
    Json maps  = Json::array();
    for (std::size_t k = 0; k < cx.length(); ++k) {
      ranks.push_back(cx.rank(k));
      if (k > 0) {
        maps.push_back(matrix_json(cx.boundary(k)));
      }
    }
    return {{"ranks", std::move(ranks)}, {"boundaries", std::move(maps)}};
  }

  inline Json condition_json(ConditionResult const& c) {
    Json j{{"pass", c.pass}};
    if (!c.pass) {
      j["witness"] = c.witness;
    }
    return j;
  }

  inline Json conditions_json(ConditionReport const& r) {
    return {{"covers", condition_json(r.covers)},
            {"i", condition_json(r.cond_i)},
            {"ii", condition_json(r.cond_ii)},
            {"iii", condition_json(r.cond_iii)}};
  }

  inline Json sigma_report_json(SigmaReport const& r) {
    return {{"bijection", condition_json(r.bijection)},
            {"*", condition_json(r.diagonal)},
            {"**", condition_json(r.flip)},
            {"***", condition_json(r.injective)},
            {"****", condition_json(r.hexagon)}};
  }

  inline Json abc_json(AbcReport const& r) {
    return {{"length_bound", r.length_bound},
            {"inconclusive", r.inconclusive},
            {"a", condition_json(r.a)},
            {"b", condition_json(r.b)},
            {"c", condition_json(r.c)}};
  }

  inline Json tower_json(ResolutionTower const& tower) {
    Json levels = Json::array();
    for (std::size_t k = 0; k < tower.levels.size(); ++k) {
      TowerLevel const& level = tower.levels[k];
      Json              l;
      l["index"]    = k;
      l["elements"] = level.E->labels();
      l["covers"]   = covers_json(level.covers);
      if (k > 0) {
        l["pi"] = matrix_json(level.pi);
        Json expansions = Json::object();
        for (Element e : level.E->nonzero()) {
          expansions[level.E->label(e)] = level.expansion[e].to_string();
        }
        l["expansions"] = std::move(expansions);
      }
      levels.push_back(std::move(l));
    }
    Json j;
    j["levels"]    = std::move(levels);
    j["truncated"] = tower.truncated;
    if (auto len = tower.length()) {
      j["length"] = *len;
    } else {
      j["length"] = nullptr;
    }
    j["log"] = tower.log;
    return j;
  }

}  // namespace indres
