#ifndef GALCOV_WORD_HPP_
#define GALCOV_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace galcov {

  // A letter is a signed generator id: +g is the generator g (ids start at 1),
  // -g its formal inverse.
  using Letter = int;

  constexpr int generator_of(Letter l) noexcept {
    return l < 0 ? -l : l;
  }

  constexpr int exponent_of(Letter l) noexcept {
    return l < 0 ? -1 : 1;
  }

  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }

    Word& operator*=(Word const& other) {
      _letters.insert(_letters.end(), other._letters.begin(),
                      other._letters.end());
      return *this;
    }

    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    Word inverse() const {
      std::vector<Letter> out(_letters.rbegin(), _letters.rend());
      for (auto& l : out) {
        l = -l;
      }
      return Word(std::move(out));
    }

    // Reversal; equals the inverse when every generator is an involution.
    Word reversed() const {
      return Word(std::vector<Letter>(_letters.rbegin(), _letters.rend()));
    }

    // Remove adjacent g g^-1 pairs until none remain.
    Word free_reduced() const {
      std::vector<Letter> out;
      out.reserve(_letters.size());
      for (Letter l : _letters) {
        if (!out.empty() && out.back() == -l) {
          out.pop_back();
        } else {
          out.push_back(l);
        }
      }
      return Word(std::move(out));
    }

    // Free reduction followed by removal of inverse pairs straddling the ends.
    Word cyclically_reduced() const {
      auto w = free_reduced()._letters;
      std::size_t lo = 0, hi = w.size();
      while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
      }
      return Word(std::vector<Letter>(w.begin() + lo, w.begin() + hi));
    }

    // All exponents set to +1; only meaningful where generators are
    // involutions.
    Word involutory() const {
      std::vector<Letter> out(_letters);
      for (auto& l : out) {
        l = generator_of(l);
      }
      return Word(std::move(out));
    }

    Word power(int k) const {
      Word out;
      for (int i = 0; i < k; ++i) {
        out *= *this;
      }
      return out;
    }

    Word subword(std::size_t pos, std::size_t len) const {
      return Word(std::vector<Letter>(_letters.begin() + pos,
                                      _letters.begin() + pos + len));
    }

    int max_generator() const noexcept {
      int g = 0;
      for (Letter l : _letters) {
        g = std::max(g, generator_of(l));
      }
      return g;
    }

    // Space separated ids; inverses printed with a leading minus sign.
    std::string to_string() const {
      std::ostringstream os;
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (i != 0) {
          os << ' ';
        }
        os << _letters[i];
      }
      return os.str();
    }

    static Word parse(std::string const& text) {
      std::istringstream is(text);
      std::vector<Letter> out;
      std::string tok;
      while (is >> tok) {
        // accept "a*b", "a.b" and "a b"
        std::string cur;
        for (char ch : tok + " ") {
          if (ch == '*' || ch == '.' || ch == ',' || ch == ' ') {
            if (!cur.empty()) {
              std::size_t used = 0;
              int v = 0;
              try {
                v = std::stoi(cur, &used);
              } catch (std::exception const&) {
                used = 0;
              }
              if (used != cur.size() || v == 0) {
                throw InputError("bad letter '" + cur + "' in word '" + text + "'");
              }
              out.push_back(v);
              cur.clear();
            }
          } else {
            cur.push_back(ch);
          }
        }
      }
      return Word(std::move(out));
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  // Word u_lo u_{lo+1} ... u_hi over consecutive ids.
  inline Word range_word(int lo, int hi) {
    Word w;
    for (int i = lo; i <= hi; ++i) {
      w.push_back(i);
    }
    return w;
  }

}  // namespace galcov

#endif  // GALCOV_WORD_HPP_
