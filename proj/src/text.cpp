// SPDX-License-Identifier: Apache-2.0

#include "gsb/text.hpp"
#include "gsb/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace gsb {

namespace {

struct Token {
	enum Kind { letter, number, plus, minus, star, equals, end } kind;
	std::string_view text;
	std::size_t column;
	int letter_value = 0;
};

class Lexer {
public:
	Lexer(std::string_view s, std::size_t line, std::size_t column0)
	: s_(s), line_(line), column0_(column0) {}

	Token peek()
	{
		if (!ahead_)
			ahead_ = lex();
		return *ahead_;
	}

	Token next()
	{
		Token t = peek();
		ahead_.reset();
		return t;
	}

	[[noreturn]] void fail(const std::string &msg, std::size_t column) const
	{
		throw ParseError(msg, line_, column0_ + column);
	}

private:
	Token lex()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			pos_++;
		std::size_t col = pos_ + 1;
		if (pos_ == s_.size())
			return {Token::end, {}, col};
		char c = s_[pos_];
		switch (c) {
		case '+': pos_++; return {Token::plus, s_.substr(pos_ - 1, 1), col};
		case '-': pos_++; return {Token::minus, s_.substr(pos_ - 1, 1), col};
		case '*': pos_++; return {Token::star, s_.substr(pos_ - 1, 1), col};
		case '=': pos_++; return {Token::equals, s_.substr(pos_ - 1, 1), col};
		}
		if (c == 'x' || c == 'X') {
			std::size_t start = pos_++;
			std::size_t digits = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				pos_++;
			if (digits == pos_)
				fail("expected a generator index after 'x'", col);
			return {Token::letter, s_.substr(start, pos_ - start), col, to_int(s_.substr(digits, pos_ - digits), col)};
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				pos_++;
			if (pos_ < s_.size() && s_[pos_] == '/') {
				pos_++;
				std::size_t den = pos_;
				while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
					pos_++;
				if (den == pos_)
					fail("expected a denominator after '/'", col);
			}
			return {Token::number, s_.substr(start, pos_ - start), col};
		}
		fail(std::string("unexpected character '") + c + "'", col);
	}

	int to_int(std::string_view digits, std::size_t col) const
	{
		int v = 0;
		auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
		if (ec != std::errc() || v < 1 || v > max_generators)
			fail("generator index out of range: " + std::string(digits), col);
		return v;
	}

	std::string_view s_;
	std::size_t pos_ = 0;
	std::size_t line_;
	std::size_t column0_;
	std::optional<Token> ahead_;
};

void check_letter(Lexer &lx, int value, int n, std::size_t col)
{
	if (n > 0 && value > n)
		lx.fail("generator x" + std::to_string(value) + " out of range 1.." + std::to_string(n), col);
}

/// Letters until a non-letter token. Bare integers count as letters when
/// allow_bare is set.
Word lex_word(Lexer &lx, int n, bool allow_bare)
{
	std::vector<Letter> letters;
	for (;;) {
		Token t = lx.peek();
		int v = 0;
		if (t.kind == Token::letter) {
			v = t.letter_value;
		} else if (allow_bare && t.kind == Token::number) {
			if (t.text.find('/') != std::string_view::npos)
				lx.fail("expected a generator, got '" + std::string(t.text) + "'", t.column);
			auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
			if (ec != std::errc() || v < 1 || v > max_generators)
				lx.fail("generator index out of range: " + std::string(t.text), t.column);
		} else {
			break;
		}
		check_letter(lx, v, n, t.column);
		letters.push_back(static_cast<Letter>(v));
		lx.next();
	}
	return Word(std::move(letters));
}

Poly lex_poly(Lexer &lx, int n)
{
	Poly p;
	bool first = true;
	bool any = false;
	for (;;) {
		Token t = lx.peek();
		Scalar sign = 1;
		if (t.kind == Token::end || t.kind == Token::equals) {
			if (!any)
				lx.fail("expected a polynomial", t.column);
			break;
		}
		if (t.kind == Token::plus || t.kind == Token::minus) {
			sign = t.kind == Token::minus ? -1 : 1;
			lx.next();
		} else if (!first) {
			lx.fail("expected '+' or '-' between terms", t.column);
		}
		first = false;
		any = true;

		Token head = lx.peek();
		Scalar coef = 1;
		if (head.kind == Token::number) {
			lx.next();
			try {
				coef = parse_scalar(std::string(head.text));
			} catch (const std::invalid_argument &e) {
				lx.fail(e.what(), head.column);
			}
			if (lx.peek().kind == Token::star) {
				lx.next();
				if (lx.peek().kind != Token::letter)
					lx.fail("expected a word after '*'", lx.peek().column);
			}
		} else if (head.kind != Token::letter) {
			lx.fail("expected a term", head.column);
		}
		Word w = lex_word(lx, n, false);
		p.add_term(w, sign * coef);
	}
	return p;
}

void expect_end(Lexer &lx)
{
	Token t = lx.peek();
	if (t.kind != Token::end)
		lx.fail("unexpected '" + std::string(t.text) + "'", t.column);
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

} // namespace

Word parse_word(std::string_view text, int n)
{
	Lexer lx(text, 1, 0);
	Word w = lex_word(lx, n, true);
	expect_end(lx);
	return w;
}

std::string format_word(const Word &w)
{
	std::string s;
	for (Letter x : w) {
		if (!s.empty())
			s += ' ';
		s += 'x';
		s += std::to_string(x);
	}
	return s;
}

Poly parse_poly(std::string_view text, int n)
{
	Lexer lx(text, 1, 0);
	Token t = lx.peek();
	if (t.kind == Token::number && t.text == "0") {
		lx.next();
		expect_end(lx);
		return Poly();
	}
	Poly p = lex_poly(lx, n);
	expect_end(lx);
	return p;
}

std::string format_poly(const Poly &p)
{
	if (p.is_zero())
		return "0";
	std::string s;
	bool first = true;
	for (const auto &[w, c] : p) {
		bool neg = c < 0;
		Scalar mag = neg ? Scalar(-c) : c;
		if (first)
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		first = false;
		if (w.empty())
			s += scalar_to_string(mag);
		else if (mag == 1)
			s += format_word(w);
		else
			s += scalar_to_string(mag) + " * " + format_word(w);
	}
	return s;
}

Poly Relation::to_poly() const
{
	if (const auto *pair = std::get_if<std::pair<Word, Word>>(&value))
		return Poly(pair->first) - Poly(pair->second);
	return std::get<Poly>(value);
}

std::vector<Poly> PresentationFile::polys() const
{
	std::vector<Poly> out;
	for (const Relation &r : relations)
		if (Poly p = r.to_poly(); !p.is_zero())
			out.push_back(std::move(p));
	return out;
}

bool PresentationFile::homogeneous_monoid() const
{
	for (const Relation &r : relations) {
		const auto *pair = std::get_if<std::pair<Word, Word>>(&r.value);
		if (!pair || pair->first.size() != pair->second.size())
			return false;
	}
	return true;
}

PresentationFile parse_presentation(std::string_view text)
{
	PresentationFile pf;
	bool have_gens = false;
	std::size_t line_no = 0;
	for (std::size_t start = 0; start < text.size(); ) {
		auto eol = text.find('\n', start);
		std::string_view line = text.substr(start, eol == std::string_view::npos ? std::string_view::npos : eol - start);
		start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
		line_no++;
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		if (trim(line).empty())
			continue;

		auto colon = line.find(':');
		if (colon == std::string_view::npos)
			throw ParseError("expected 'gens:' or 'rel:'", line_no, 1);
		std::string_view key = trim(line.substr(0, colon));
		std::string_view body = line.substr(colon + 1);
		std::size_t col0 = colon + 1;

		if (key == "gens") {
			if (have_gens)
				throw ParseError("duplicate 'gens' line", line_no, 1);
			std::string_view v = trim(body);
			int n = 0;
			auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
			if (ec != std::errc() || p != v.data() + v.size() || n < 1 || n > max_generators)
				throw ParseError("'gens' needs an integer in 1..255", line_no, col0 + 1);
			pf.n = n;
			have_gens = true;
		} else if (key == "rel") {
			if (!have_gens)
				throw ParseError("'rel' before 'gens'", line_no, 1);
			Lexer lx(body, line_no, col0);
			auto eq = body.find('=');
			if (eq != std::string_view::npos) {
				Word lhs = lex_word(lx, pf.n, true);
				Token t = lx.next();
				if (t.kind != Token::equals)
					lx.fail("malformed relation, expected '<word> = <word>'", t.column);
				Word rhs = lex_word(lx, pf.n, true);
				expect_end(lx);
				if (lhs.empty() && rhs.empty())
					lx.fail("malformed relation: both sides empty", eq + 1);
				pf.relations.push_back({std::pair{std::move(lhs), std::move(rhs)}});
			} else {
				Poly p = lex_poly(lx, pf.n);
				expect_end(lx);
				pf.relations.push_back({std::move(p)});
			}
		} else {
			throw ParseError("unknown key '" + std::string(key) + "'", line_no, 1);
		}
	}
	if (!have_gens)
		throw ParseError("missing 'gens' line", std::max<std::size_t>(line_no, 1), 1);
	return pf;
}

} // namespace gsb
