#ifndef BCHKIT_WORD_HPP
#define BCHKIT_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bchkit {

/// One noncommuting variable. Ids are dense small integers; the default
/// alphabet labels them "x", "y", "z", then "g3", "g4", ...
struct Generator {
	std::uint8_t id = 0;
	std::string label() const;
};

/// Label of generator `id` in the default alphabet.
std::string generator_label(int id);

/// Largest supported alphabet (word letters are 8-bit generator ids).
inline constexpr int kMaxAlphabet = 255;

/// A word in the free monoid over the generators: a finite ordered sequence
/// of generator ids. The empty word is the multiplicative identity monomial.
/// Degree is the length and is O(1).
class Word {
  public:
	Word() = default;
	explicit Word(std::vector<std::uint8_t> letters)
	    : letters_(std::move(letters))
	{
	}
	static Word single(std::uint8_t id) { return Word({id}); }

	int degree() const { return static_cast<int>(letters_.size()); }
	bool empty() const { return letters_.empty(); }
	const std::vector<std::uint8_t> &letters() const { return letters_; }

	/// Concatenated generator labels, "" for the empty word.
	std::string str() const;

	friend bool operator==(const Word &a, const Word &b)
	{
		return a.letters_ == b.letters_;
	}
	friend bool operator!=(const Word &a, const Word &b) { return !(a == b); }

  private:
	std::vector<std::uint8_t> letters_;
};

/// Concatenation uv. Associative, non-commutative; degrees add.
Word word_concat(const Word &u, const Word &v);

/// Canonical term order: degree first, then lexicographic by generator id.
struct DegLexLess {
	bool operator()(const Word &a, const Word &b) const;
};

/// Inverse of Word::str() over the default alphabet ("xyx", "g3x", ...).
/// Throws std::invalid_argument on any token that is not a default label.
Word parse_word(const std::string &text);

} // namespace bchkit

#endif
