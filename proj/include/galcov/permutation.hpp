#ifndef GALCOV_PERMUTATION_HPP_
#define GALCOV_PERMUTATION_HPP_

// The transposition homomorphism G_1 -> S_{2mn}: edge j goes to the
// transposition of the two triangles meeting along j.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "grid_complex.hpp"
#include "json.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace galcov {

  // A permutation of the points 1..N, stored 0-based.  Products act on the
  // right: x^(p*q) = (x^p)^q, so words evaluate left to right.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(int degree) : _img(degree) {
      std::iota(_img.begin(), _img.end(), 0);
    }
    // Images given 1-based.
    static Permutation from_images(std::vector<int> const& images) {
      Permutation p(static_cast<int>(images.size()));
      std::vector<bool> hit(images.size(), false);
      for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i] - 1;
        if (v < 0 || v >= static_cast<int>(images.size()) || hit[v]) {
          throw InputError("images do not form a bijection");
        }
        hit[v] = true;
        p._img[i] = v;
      }
      return p;
    }
    static Permutation transposition(int degree, int a, int b) {
      Permutation p(degree);
      std::swap(p._img[a - 1], p._img[b - 1]);
      return p;
    }

    int degree() const noexcept {
      return static_cast<int>(_img.size());
    }
    // 1-based image of a 1-based point
    int operator()(int point) const {
      return _img[point - 1] + 1;
    }
    std::vector<int> const& raw() const noexcept {
      return _img;
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _img.size(); ++i) {
        if (_img[i] != static_cast<int>(i)) {
          return false;
        }
      }
      return true;
    }

    Permutation inverse() const {
      Permutation p(degree());
      for (std::size_t i = 0; i < _img.size(); ++i) {
        p._img[_img[i]] = static_cast<int>(i);
      }
      return p;
    }

    friend Permutation operator*(Permutation const& p, Permutation const& q) {
      Permutation r(p.degree());
      for (std::size_t i = 0; i < p._img.size(); ++i) {
        r._img[i] = q._img[p._img[i]];
      }
      return r;
    }

    Permutation& operator*=(Permutation const& q) {
      for (auto& v : _img) {
        v = q._img[v];
      }
      return *this;
    }

    // p^-1 q p
    Permutation conjugate(Permutation const& p) const {
      return p.inverse() * *this * p;
    }

    std::string to_cycle_string() const {
      std::string out;
      std::vector<bool> seen(_img.size(), false);
      for (std::size_t i = 0; i < _img.size(); ++i) {
        if (seen[i] || _img[i] == static_cast<int>(i)) {
          continue;
        }
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
          seen[j] = true;
          out += (first ? "" : ",") + std::to_string(j + 1);
          first = false;
          j = _img[j];
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _img;
  };

  // Images of the generators 1..N; index 0 unused.
  struct GeneratorMap {
    int degree = 0;
    std::vector<Permutation> images;

    int generator_count() const noexcept {
      return images.empty() ? 0 : static_cast<int>(images.size()) - 1;
    }
    Permutation const& at(int g) const {
      if (g < 1 || g > generator_count()) {
        throw InputError("generator " + std::to_string(g) + " not in map");
      }
      return images[g];
    }
  };

  inline GeneratorMap transposition_map(DegenerationComplex const& cx) {
    GeneratorMap map;
    map.degree = cx.params().triangle_count();
    map.images.emplace_back(map.degree);
    for (auto const& e : cx.edges()) {
      map.images.push_back(Permutation::transposition(
          map.degree, e.triangles[0], e.triangles[1]));
    }
    return map;
  }

  // Conjugate every image by a relabelling of the points.
  inline GeneratorMap relabel(GeneratorMap const& map, Permutation const& sigma) {
    GeneratorMap out = map;
    for (auto& p : out.images) {
      p = p.conjugate(sigma);
    }
    return out;
  }

  inline Permutation random_permutation(int degree, std::uint64_t seed) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    std::mt19937_64 rng(seed);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
  }

  inline Permutation eval_word(Word const& w, GeneratorMap const& map) {
    Permutation p(map.degree);
    for (Letter l : w) {
      auto const& g = map.at(generator_of(l));
      p *= (l > 0 ? g : g.inverse());
    }
    return p;
  }

  inline bool kernel_membership(Word const& w, GeneratorMap const& map) {
    return eval_word(w, map).is_identity();
  }

  struct RelatorCheck {
    std::size_t index;
    Relator relator;
    bool pass;
    std::string image;  // cycle notation of the image when it fails
  };

  struct HomReport {
    std::string presentation;
    std::vector<RelatorCheck> checks;
    bool pass = true;
    std::optional<Word> counterexample;

    std::size_t failures() const {
      return std::count_if(checks.begin(), checks.end(),
                           [](RelatorCheck const& c) { return !c.pass; });
    }
  };

  inline HomReport verify_relators(GroupPresentation const& p,
                                   GeneratorMap const& map) {
    if (p.generator_count() != map.generator_count()) {
      throw InputError("presentation has " + std::to_string(p.generator_count())
                       + " generators, map has "
                       + std::to_string(map.generator_count()));
    }
    HomReport rep;
    rep.presentation = p.name;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      auto img = eval_word(p.relators[i].word, map);
      bool ok = img.is_identity();
      rep.checks.push_back({i, p.relators[i], ok, ok ? "" : img.to_cycle_string()});
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.counterexample = p.relators[i].word;
      }
    }
    return rep;
  }

  inline nlohmann::ordered_json to_json(HomReport const& r,
                                        bool failures_only = false) {
    nlohmann::ordered_json j;
    j["schema"] = "galcov-homreport/1";
    j["presentation"] = r.presentation;
    j["relators"] = r.checks.size();
    j["failures"] = r.failures();
    j["pass"] = r.pass;
    if (r.counterexample) {
      j["counterexample"] = r.counterexample->letters();
    } else {
      j["counterexample"] = nullptr;
    }
    auto arr = nlohmann::ordered_json::array();
    for (auto const& c : r.checks) {
      if (failures_only && c.pass) {
        continue;
      }
      nlohmann::ordered_json o;
      o["index"] = c.index;
      o["tag"] = to_string(c.relator.tag);
      o["label"] = c.relator.label;
      o["word"] = c.relator.word.letters();
      o["pass"] = c.pass;
      if (!c.pass) {
        o["image"] = c.image;
      }
      arr.push_back(o);
    }
    j["checks"] = arr;
    return j;
  }

  // Orbit of point 1 under the generator images.
  inline bool transitive(GeneratorMap const& map) {
    if (map.degree == 0) {
      return true;
    }
    std::vector<bool> seen(map.degree + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int g = 1; g <= map.generator_count(); ++g) {
        int y = map.images[g](x);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == map.degree;
  }

}  // namespace galcov

#endif  // GALCOV_PERMUTATION_HPP_
