#pragma once

// Quadratic presentations (Sigma, sigma) with relations a sigma_l(a,b) =
// b sigma_r(a,b): validity of sigma, right reversing, least common
// multiples in the positive monoid, bounded checks of (a)(b)(c), the
// resulting one-orbit model, its group homology and the census of all valid
// sigma on a small alphabet.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "indres/chain_complex.hpp"
#include "indres/integer.hpp"
#include "indres/mu.hpp"
#include "indres/orbit_model.hpp"
#include "indres/resolution.hpp"

namespace indres {

  using Letter = int;                   // index into the alphabet
  using Word   = std::vector<Letter>;   // positive word

  struct SignedLetter {
    Letter gen;
    int    exp;  // +1 or -1

    friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
  };

  using SignedWord = std::vector<SignedLetter>;

  inline SignedWord positive(Word const& w) {
    SignedWord out;
    for (Letter a : w) {
      out.push_back({a, 1});
    }
    return out;
  }

  // w^-1 for a positive word w.
  inline SignedWord inverse(Word const& w) {
    SignedWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({*it, -1});
    }
    return out;
  }

  inline SignedWord concat(SignedWord a, SignedWord const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  class SigmaMap {
   public:
    using Pair = std::pair<Letter, Letter>;

    // table[a * size + b] = sigma(a, b).
    SigmaMap(std::vector<std::string> alphabet, std::vector<Pair> table)
        : _alphabet(std::move(alphabet)), _table(std::move(table)) {
      std::size_t const s = _alphabet.size();
      if (s == 0) {
        throw DomainError("sigma: empty alphabet");
      }
      if (std::set<std::string>(_alphabet.begin(), _alphabet.end()).size() != s) {
        throw DomainError("sigma: repeated alphabet letter");
      }
      if (_table.size() != s * s) {
        throw DomainError("sigma: table must list every pair");
      }
      for (auto const& [c, d] : _table) {
        if (c < 0 || d < 0 || static_cast<std::size_t>(c) >= s
            || static_cast<std::size_t>(d) >= s) {
          throw DomainError("sigma: value outside the alphabet");
        }
      }
    }

    static SigmaMap identity(std::vector<std::string> alphabet) {
      std::size_t const s = alphabet.size();
      std::vector<Pair> t;
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
          t.emplace_back(static_cast<Letter>(a), static_cast<Letter>(b));
        }
      }
      return SigmaMap(std::move(alphabet), std::move(t));
    }

    // sigma(a, b) = (b, a): the free abelian group.
    static SigmaMap flip(std::vector<std::string> alphabet) {
      std::size_t const s = alphabet.size();
      std::vector<Pair> t;
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
          t.emplace_back(static_cast<Letter>(b), static_cast<Letter>(a));
        }
      }
      return SigmaMap(std::move(alphabet), std::move(t));
    }

    std::size_t size() const noexcept {
      return _alphabet.size();
    }

    std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }

    std::string const& label(Letter a) const {
      return _alphabet.at(static_cast<std::size_t>(a));
    }

    std::optional<Letter> find(std::string const& lbl) const {
      auto it = std::find(_alphabet.begin(), _alphabet.end(), lbl);
      if (it == _alphabet.end()) {
        return std::nullopt;
      }
      return static_cast<Letter>(it - _alphabet.begin());
    }

    Pair const& at(Letter a, Letter b) const {
      return _table[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
    }

    Letter left(Letter a, Letter b) const {
      return at(a, b).first;
    }

    Letter right(Letter a, Letter b) const {
      return at(a, b).second;
    }

    std::vector<Pair> const& table() const noexcept {
      return _table;
    }

    // Two distinct pairs with the same image, if sigma is not a bijection.
    std::optional<std::pair<Pair, Pair>> collision() const {
      std::map<Pair, Pair> seen;
      for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
          Pair const src{static_cast<Letter>(a), static_cast<Letter>(b)};
          auto [it, fresh] = seen.emplace(_table[a * size() + b], src);
          if (!fresh) {
            return std::make_pair(it->second, src);
          }
        }
      }
      return std::nullopt;
    }

    // sigma^-1; requires a bijection.
    SigmaMap inverse() const {
      if (collision()) {
        throw DomainError("sigma: not a bijection");
      }
      std::vector<Pair> t(_table.size());
      for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
          auto const [c, d] = _table[a * size() + b];
          t[static_cast<std::size_t>(c) * size() + static_cast<std::size_t>(d)]
              = {static_cast<Letter>(a), static_cast<Letter>(b)};
        }
      }
      return SigmaMap(_alphabet, std::move(t));
    }

    // The same relations after renaming letter a to pi[a].
    SigmaMap relabel(std::vector<Letter> const& pi) const {
      std::vector<Pair> t(_table.size());
      for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
          auto const [c, d] = _table[a * size() + b];
          t[static_cast<std::size_t>(pi[a]) * size() + static_cast<std::size_t>(pi[b])]
              = {pi[static_cast<std::size_t>(c)], pi[static_cast<std::size_t>(d)]};
        }
      }
      return SigmaMap(_alphabet, std::move(t));
    }

    std::string word_string(Word const& w) const {
      if (w.empty()) {
        return "ε";
      }
      std::string s;
      for (Letter a : w) {
        s += label(a);
      }
      return s;
    }

    std::string word_string(SignedWord const& w) const {
      if (w.empty()) {
        return "ε";
      }
      std::string s;
      for (auto const& l : w) {
        s += label(l.gen) + (l.exp < 0 ? "^-1" : "");
      }
      return s;
    }

    friend bool operator==(SigmaMap const&, SigmaMap const&) = default;

   private:
    std::vector<std::string> _alphabet;
    std::vector<Pair>        _table;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Validity (*)-(****)
  ////////////////////////////////////////////////////////////////////////////

  struct SigmaReport {
    ConditionResult bijection;
    ConditionResult diagonal;   // (*)
    ConditionResult flip;       // (**)
    ConditionResult injective;  // (***)
    ConditionResult hexagon;    // (****) for sigma and sigma^-1

    bool all() const noexcept {
      return bijection.pass && diagonal.pass && flip.pass && injective.pass
             && hexagon.pass;
    }

    std::string first_failure() const {
      for (auto const* c : {&bijection, &diagonal, &flip, &injective, &hexagon}) {
        if (!c->pass) {
          return c->witness;
        }
      }
      return "";
    }
  };

  namespace detail {

    inline std::string pair_string(SigmaMap const& s, SigmaMap::Pair const& p) {
      return "(" + s.label(p.first) + "," + s.label(p.second) + ")";
    }

    // First pairwise distinct (a, b, c) for which no j, k, l close the hexagon.
    inline std::optional<std::array<Letter, 3>> hexagon_failure(SigmaMap const& s) {
      auto const n = static_cast<Letter>(s.size());
      for (Letter a = 0; a < n; ++a) {
        for (Letter b = 0; b < n; ++b) {
          for (Letter c = 0; c < n; ++c) {
            if (a == b || b == c || a == c) {
              continue;
            }
            auto const [d, e] = s.at(a, b);
            auto const [f, g] = s.at(b, c);
            auto const [h, i] = s.at(c, a);
            auto const [j, k] = s.at(e, f);
            auto const [k2, l] = s.at(g, h);
            auto const [l2, j2] = s.at(i, d);
            if (k2 != k || l2 != l || j2 != j) {
              return std::array<Letter, 3>{a, b, c};
            }
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  inline SigmaReport validate_sigma(SigmaMap const& s) {
    SigmaReport r;
    auto const  n = static_cast<Letter>(s.size());
    if (auto c = s.collision()) {
      r.bijection.fail("sigma is not a bijection: " + detail::pair_string(s, c->first)
                       + " and " + detail::pair_string(s, c->second) + " map to "
                       + detail::pair_string(s, s.at(c->first.first, c->first.second)));
    }
    for (Letter a = 0; a < n; ++a) {
      if (s.at(a, a) != SigmaMap::Pair{a, a}) {
        r.diagonal.fail("(*) fails at " + s.label(a));
      }
    }
    for (Letter a = 0; a < n; ++a) {
      for (Letter b = 0; b < n; ++b) {
        auto const [l, rr] = s.at(a, b);
        if (s.at(b, a) != SigmaMap::Pair{rr, l}) {
          r.flip.fail("(**) fails at (" + s.label(a) + "," + s.label(b) + ")");
        }
      }
    }
    for (Letter a = 0; a < n; ++a) {
      for (Letter x = 0; x < n; ++x) {
        for (Letter y = x + 1; y < n; ++y) {
          if (x != a && y != a && s.left(a, x) == s.left(a, y)) {
            r.injective.fail("(***) fails at " + s.label(a) + ": sigma_l("
                             + s.label(a) + "," + s.label(x) + ") = sigma_l("
                             + s.label(a) + "," + s.label(y) + ")");
          }
        }
      }
    }
    if (auto w = detail::hexagon_failure(s)) {
      r.hexagon.fail("(****) fails at (" + s.label((*w)[0]) + "," + s.label((*w)[1])
                     + "," + s.label((*w)[2]) + ")");
    } else if (r.bijection.pass) {
      if (auto w2 = detail::hexagon_failure(s.inverse())) {
        r.hexagon.fail("(****) fails for sigma^-1 at (" + s.label((*w2)[0]) + ","
                       + s.label((*w2)[1]) + "," + s.label((*w2)[2]) + ")");
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Right reversing and lcms
  ////////////////////////////////////////////////////////////////////////////

  // u v^-1 with u, v positive.
  struct Reversed {
    Word numerator;
    Word denominator;

    bool is_empty() const noexcept {
      return numerator.empty() && denominator.empty();
    }

    friend bool operator==(Reversed const&, Reversed const&) = default;
  };

  inline std::size_t default_max_steps(std::size_t length) {
    return std::max<std::size_t>(10 * length * length, 16);
  }

  // Rewrites the leftmost a^-1 b until none is left; nullopt after max_steps
  // rewrites (0 selects the default bound).
  inline std::optional<Reversed> right_reverse(SignedWord      w,
                                               SigmaMap const& s,
                                               std::size_t     max_steps = 0) {
    if (max_steps == 0) {
      max_steps = default_max_steps(w.size());
    }
    for (auto const& l : w) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= s.size()
          || (l.exp != 1 && l.exp != -1)) {
        throw DomainError("right_reverse: malformed letter");
      }
    }
    std::size_t steps = 0;
    std::size_t from  = 0;
    while (true) {
      std::size_t i = from;
      while (i + 1 < w.size() && !(w[i].exp == -1 && w[i + 1].exp == 1)) {
        ++i;
      }
      if (i + 1 >= w.size()) {
        break;
      }
      if (steps++ == max_steps) {
        return std::nullopt;
      }
      std::size_t const before = w.size();
      Letter const      a      = w[i].gen;
      Letter const      b      = w[i + 1].gen;
      if (a == b) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
      } else {
        auto const [c, d] = s.at(a, b);
        w[i]              = {c, 1};
        w[i + 1]          = {d, -1};
      }
      if (w.size() > before) {
        throw DomainError("right_reverse: word grew");
      }
      from = i == 0 ? 0 : i - 1;
    }
    Reversed out;
    std::size_t i = 0;
    for (; i < w.size() && w[i].exp == 1; ++i) {
      out.numerator.push_back(w[i].gen);
    }
    for (std::size_t j = w.size(); j > i; --j) {
      out.denominator.push_back(w[j - 1].gen);
    }
    return out;
  }

  // Equality in the positive monoid: w1^-1 w2 reverses to the empty word.
  inline std::optional<bool> equal_in_monoid(Word const&     w1,
                                             Word const&     w2,
                                             SigmaMap const& s,
                                             std::size_t     max_steps = 0) {
    if (w1.size() != w2.size()) {
      return false;
    }
    auto r = right_reverse(concat(inverse(w1), positive(w2)), s, max_steps);
    if (!r) {
      return std::nullopt;
    }
    return r->is_empty();
  }

  struct LcmResult {
    Word lcm;          // p u
    Word right_of_p;   // u
    Word right_of_q;   // v, with q v = p u
  };

  // pP cap qP = zP with z = p u where p^-1 q reverses to u v^-1. The
  // symmetric form q v is checked to be the same element.
  inline std::optional<LcmResult> lcm_detail(Word const&     p,
                                             Word const&     q,
                                             SigmaMap const& s,
                                             std::size_t     max_steps = 0) {
    auto r = right_reverse(concat(inverse(p), positive(q)), s, max_steps);
    if (!r) {
      return std::nullopt;
    }
    LcmResult out;
    out.right_of_p = r->numerator;
    out.right_of_q = r->denominator;
    out.lcm        = p;
    out.lcm.insert(out.lcm.end(), r->numerator.begin(), r->numerator.end());
    Word qv = q;
    qv.insert(qv.end(), r->denominator.begin(), r->denominator.end());
    auto same = equal_in_monoid(out.lcm, qv, s, max_steps);
    if (!same) {
      return std::nullopt;
    }
    if (!*same) {
      throw DomainError("lcm: " + s.word_string(out.lcm) + " and " + s.word_string(qv)
                        + " differ; reversing is not complete for this sigma");
    }
    return out;
  }

  inline std::optional<Word> lcm(Word const&     p,
                                 Word const&     q,
                                 SigmaMap const& s,
                                 std::size_t     max_steps = 0) {
    auto r = lcm_detail(p, q, s, max_steps);
    if (!r) {
      return std::nullopt;
    }
    return r->lcm;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Bounded checks of (a), (b), (c)
  ////////////////////////////////////////////////////////////////////////////

  struct AbcReport {
    std::size_t     length_bound = 0;
    bool            inconclusive = false;
    ConditionResult a;
    ConditionResult b;
    ConditionResult c;

    bool all() const noexcept {
      return !inconclusive && a.pass && b.pass && c.pass;
    }
  };

  // All positive words of length <= L in shortlex order.
  inline std::vector<Word> words_up_to(std::size_t alphabet, std::size_t L) {
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= L; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t a = 0; a < alphabet; ++a) {
          Word w = out[i];
          w.push_back(static_cast<Letter>(a));
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  inline AbcReport check_abc(SigmaMap const& s,
                             std::size_t     L         = 4,
                             std::size_t     max_steps = 0) {
    AbcReport r;
    r.length_bound = L;
    // Relations a sigma_l(a,b) = b sigma_r(a,b) are homogeneous of degree 2,
    // so the length is a homomorphism P -> N and P has no nontrivial units.
    auto const words = words_up_to(s.size(), L);
    std::map<std::pair<std::size_t, std::size_t>, Word> lcms;
    for (std::size_t x = 0; x < words.size(); ++x) {
      for (std::size_t y = 0; y < words.size(); ++y) {
        try {
          auto z = lcm(words[x], words[y], s, max_steps);
          if (!z) {
            r.inconclusive = true;
            r.a.fail("reversing inconclusive for " + s.word_string(words[x]) + ", "
                     + s.word_string(words[y]));
            return r;
          }
          lcms.emplace(std::make_pair(x, y), std::move(*z));
        } catch (DomainError const& err) {
          r.a.fail(err.what());
          return r;
        }
      }
    }
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], i);
    }
    for (std::size_t x = 0; x < words.size() && r.b.pass; ++x) {
      if (words[x].size() == L) {
        continue;
      }
      for (std::size_t y = 0; y < words.size() && r.b.pass; ++y) {
        Word const& z = lcms.at({x, y});
        for (Letter a = 0; a < static_cast<Letter>(s.size()); ++a) {
          Word xs = words[x];
          xs.push_back(a);
          Word const& z2 = lcms.at({index.at(xs), y});
          bool        ok = z2.size() == z.size() || z2.size() == z.size() + 1;
          if (ok) {
            auto rest = right_reverse(concat(inverse(z), positive(z2)), s, max_steps);
            if (!rest) {
              r.inconclusive = true;
              return r;
            }
            ok = rest->denominator.empty();
          }
          if (!ok) {
            r.b.fail("x=" + s.word_string(words[x]) + ", y=" + s.word_string(words[y])
                     + ", s=" + s.label(a) + ": lcm(xs,y) = " + s.word_string(z2)
                     + " is not lcm(x,y) = " + s.word_string(z)
                     + " or one letter longer");
            break;
          }
        }
      }
    }
    for (std::uint32_t F = 1; F < (std::uint32_t(1) << s.size()) && r.c.pass; ++F) {
      Word meet;
      bool first = true;
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (F & (std::uint32_t(1) << t)) {
          Word const gen{static_cast<Letter>(t)};
          auto       m = first ? std::optional<Word>(gen) : lcm(meet, gen, s, max_steps);
          if (!m) {
            r.inconclusive = true;
            return r;
          }
          meet  = *m;
          first = false;
        }
      }
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (F & (std::uint32_t(1) << t)) {
          continue;
        }
        auto m = lcm(meet, Word{static_cast<Letter>(t)}, s, max_steps);
        if (!m) {
          r.inconclusive = true;
          return r;
        }
        if (m->size() <= meet.size()) {
          std::string set;
          for (std::size_t u = 0; u < s.size(); ++u) {
            if (F & (std::uint32_t(1) << u)) {
              set += (set.empty() ? "" : ",") + s.label(static_cast<Letter>(u));
            }
          }
          r.c.fail("F={" + set + "}, s=" + s.label(static_cast<Letter>(t))
                   + ": sP does not cut the intersection " + s.word_string(meet) + "P");
          break;
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Orbit model, homology
  ////////////////////////////////////////////////////////////////////////////

  // i#j from the lcm oracle: lcm(s_i, s_j) = s_i s_k gives k. The closed form
  // k = index(sigma_l(s_i, s_j)) is asserted against it.
  inline SharpTable sharp_from_lcm(SigmaMap const& s, std::size_t max_steps = 0) {
    int const  n = static_cast<int>(s.size());
    SharpTable t(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) {
          continue;
        }
        auto r = lcm_detail(Word{i - 1}, Word{j - 1}, s, max_steps);
        if (!r) {
          throw DomainError("orbit model: reversing inconclusive for lcm("
                            + s.label(i - 1) + "," + s.label(j - 1) + ")");
        }
        if (r->right_of_p.size() != 1) {
          throw DomainError("orbit model: lcm(" + s.label(i - 1) + ","
                            + s.label(j - 1) + ") is not of length 2");
        }
        int const k      = r->right_of_p[0] + 1;
        int const closed = s.left(i - 1, j - 1) + 1;
        if (k != closed) {
          throw DomainError("orbit model: lcm oracle gives " + std::to_string(i) + "#"
                            + std::to_string(j) + " = " + std::to_string(k)
                            + " but sigma_l gives " + std::to_string(closed));
        }
        t.set(i, j, k);
      }
    }
    return t;
  }

  // One orbit [P], every M_i the 1x1 identity, sharp table from lcms.
  // length_bound > 0 also requires (a)(b)(c) up to that word length.
  inline OrbitModel orbit_model(SigmaMap const& s,
                                std::size_t     length_bound = 4,
                                std::size_t     max_steps    = 0) {
    SigmaReport const v = validate_sigma(s);
    if (!v.all()) {
      throw DomainError("orbit model: " + v.first_failure());
    }
    if (length_bound > 0) {
      AbcReport const abc = check_abc(s, length_bound, max_steps);
      if (!abc.all()) {
        throw DomainError("orbit model: (a)(b)(c) not verified up to length "
                          + std::to_string(length_bound));
      }
    }
    return OrbitModel::single_orbit(sharp_from_lcm(s, max_steps));
  }

  struct HomologyOptions {
    bool        cohomology   = false;
    bool        cross_check  = false;  // also compare with C
    std::size_t length_bound = 4;
    std::size_t max_steps    = 0;
  };

  struct GroupHomology {
    std::vector<HomologyGroup>        homology;    // degrees 0..n+1
    std::vector<HomologyGroup>        cohomology;  // degrees 0..n+1 when requested
    std::optional<HomologyComparison> comparison;
    SharpTable                        sharp;
  };

  inline GroupHomology group_homology(SigmaMap const& s, HomologyOptions const& opt = {}) {
    OrbitModel const   model = orbit_model(s, opt.length_bound, opt.max_steps);
    ChainComplex const ct    = build_Ctilde(model);
    std::size_t const  top   = s.size() + 1;
    GroupHomology      out{homology_all(ct, top), {}, std::nullopt, model.sharp()};
    if (opt.cohomology) {
      out.cohomology = cohomology_all(ct, top);
    }
    if (opt.cross_check) {
      out.comparison = compare_homology(model);
    }
    return out;
  }

  inline std::string signature(std::vector<HomologyGroup> const& hs) {
    std::string out;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      out += (k == 0 ? "" : "; ") + ("H_" + std::to_string(k) + " = ") + hs[k].to_string();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> default_alphabet(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                            : "s" + std::to_string(i + 1));
    }
    return out;
  }

  namespace detail {

    inline std::vector<int> encoding(SigmaMap const& s) {
      std::vector<int> out;
      for (auto const& [c, d] : s.table()) {
        out.push_back(c);
        out.push_back(d);
      }
      return out;
    }

  }  // namespace detail

  // The relabeling of s with lexicographically least table.
  inline SigmaMap canonical_form(SigmaMap const& s) {
    std::vector<Letter> pi(s.size());
    for (std::size_t i = 0; i < pi.size(); ++i) {
      pi[i] = static_cast<Letter>(i);
    }
    SigmaMap best = s;
    auto     key  = detail::encoding(s);
    do {
      SigmaMap candidate = s.relabel(pi);
      auto     k         = detail::encoding(candidate);
      if (k < key) {
        key  = std::move(k);
        best = std::move(candidate);
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
  }

  // Every sigma satisfying (*) and (**): a bijection of the unordered
  // off-diagonal pairs together with an orientation of each image.
  inline std::vector<SigmaMap> structural_candidates(std::size_t n) {
    auto const alphabet = default_alphabet(n);
    std::vector<SigmaMap::Pair> pairs;
    for (Letter a = 0; a < static_cast<Letter>(n); ++a) {
      for (Letter b = a + 1; b < static_cast<Letter>(n); ++b) {
        pairs.emplace_back(a, b);
      }
    }
    std::size_t const N = pairs.size();
    if (N > 10) {
      throw DomainError("census: alphabet too large");
    }
    std::vector<std::size_t> image(N);
    for (std::size_t i = 0; i < N; ++i) {
      image[i] = i;
    }
    std::vector<SigmaMap> out;
    do {
      for (std::uint32_t orient = 0; orient < (std::uint32_t(1) << N); ++orient) {
        std::vector<SigmaMap::Pair> t(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          t[a * n + a] = {static_cast<Letter>(a), static_cast<Letter>(a)};
        }
        for (std::size_t i = 0; i < N; ++i) {
          auto [c, d] = pairs[image[i]];
          if (orient & (std::uint32_t(1) << i)) {
            std::swap(c, d);
          }
          auto const [a, b] = pairs[i];
          t[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = {c, d};
          t[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = {d, c};
        }
        out.emplace_back(alphabet, std::move(t));
      }
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
  }

  struct CensusClass {
    SigmaMap                   representative;
    std::size_t                raw_members = 0;
    std::vector<HomologyGroup> homology;  // degrees 0..n
  };

  struct CensusReport {
    std::size_t                        size       = 0;
    std::size_t                        candidates = 0;  // satisfying (*), (**)
    std::size_t                        raw_valid  = 0;
    std::vector<CensusClass>           classes;         // canonical
    std::map<std::string, std::size_t> signatures;      // classes per signature
  };

  inline CensusReport census(std::size_t n, bool with_homology = true) {
    CensusReport report;
    report.size = n;
    std::map<std::vector<int>, std::size_t> by_key;
    for (auto const& s : structural_candidates(n)) {
      ++report.candidates;
      if (!validate_sigma(s).all()) {
        continue;
      }
      ++report.raw_valid;
      SigmaMap canon = canonical_form(s);
      auto     key   = detail::encoding(canon);
      auto     it    = by_key.find(key);
      if (it == by_key.end()) {
        by_key.emplace(std::move(key), report.classes.size());
        report.classes.push_back(CensusClass{std::move(canon), 1, {}});
      } else {
        ++report.classes[it->second].raw_members;
      }
    }
    std::sort(report.classes.begin(), report.classes.end(), [](auto const& x, auto const& y) {
      return detail::encoding(x.representative) < detail::encoding(y.representative);
    });
    if (with_homology) {
      for (auto& c : report.classes) {
        OrbitModel const model = OrbitModel::single_orbit(sharp_from_lcm(c.representative));
        c.homology = homology_all(build_Ctilde(model), n);
        ++report.signatures[signature(c.homology)];
      }
    }
    return report;
  }

}  // namespace indres
