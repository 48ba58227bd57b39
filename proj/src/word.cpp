#include "bchkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bchkit {

std::string generator_label(int id)
{
	switch (id)
	{
	case 0:
		return "x";
	case 1:
		return "y";
	case 2:
		return "z";
	default:
		return "g" + std::to_string(id);
	}
}

std::string Generator::label() const { return generator_label(id); }

std::string Word::str() const
{
	std::string s;
	for (auto id : letters_)
		s += generator_label(id);
	return s;
}

Word word_concat(const Word &u, const Word &v)
{
	std::vector<std::uint8_t> letters;
	letters.reserve(u.letters().size() + v.letters().size());
	letters.insert(letters.end(), u.letters().begin(), u.letters().end());
	letters.insert(letters.end(), v.letters().begin(), v.letters().end());
	return Word(std::move(letters));
}

bool DegLexLess::operator()(const Word &a, const Word &b) const
{
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
	                                    b.letters().begin(),
	                                    b.letters().end());
}

Word parse_word(const std::string &text)
{
	std::vector<std::uint8_t> letters;
	for (std::size_t i = 0; i < text.size();)
	{
		char c = text[i];
		if (c == 'x')
			letters.push_back(0), ++i;
		else if (c == 'y')
			letters.push_back(1), ++i;
		else if (c == 'z')
			letters.push_back(2), ++i;
		else if (c == 'g')
		{
			std::size_t j = i + 1;
			while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
				++j;
			if (j == i + 1)
				throw std::invalid_argument("parse_word: bare 'g' in '" + text + "'");
			int id = std::stoi(text.substr(i + 1, j - i - 1));
			if (id < 3 || id > kMaxAlphabet)
				throw std::invalid_argument("parse_word: generator id out of range in '" + text + "'");
			letters.push_back(static_cast<std::uint8_t>(id));
			i = j;
		}
		else
			throw std::invalid_argument("parse_word: unexpected character '" +
			                            std::string(1, c) + "' in '" + text + "'");
	}
	return Word(std::move(letters));
}

} // namespace bchkit
