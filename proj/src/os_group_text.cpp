#include <cctype>

#include "overshear/os_group.hpp"

namespace overshear {
namespace {

using Kind = ParseError::Kind;

class LetterParser {
 public:
  LetterParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  OSLetter parse() {
    skip_ws();
    amalgam::Factor factor;
    if (line_.substr(pos_, 2) == "O1") {
      factor = amalgam::Factor::First;
    } else if (line_.substr(pos_, 2) == "O2") {
      factor = amalgam::Factor::Second;
    } else {
      fail("expected 'O1' or 'O2'");
    }
    pos_ += 2;
    expect('{');

    std::optional<ExpPoly> f, g, xg;
    std::size_t f_col = 0;
    for (;;) {
      skip_ws();
      const std::size_t key_start = pos_;
      while (pos_ < line_.size() &&
             std::isalpha(static_cast<unsigned char>(line_[pos_])))
        ++pos_;
      const std::string_view key = line_.substr(key_start, pos_ - key_start);
      std::optional<ExpPoly>* slot = nullptr;
      if (key == "f") {
        slot = &f;
        f_col = key_start;
      } else if (key == "g") {
        slot = &g;
      } else if (key == "xg") {
        slot = &xg;
      } else {
        pos_ = key_start;
        fail("expected 'f', 'g' or 'xg'");
      }
      if (slot->has_value()) {
        pos_ = key_start;
        fail("duplicate key");
      }
      expect('=');
      const std::size_t value_start = pos_;
      const std::size_t value_end = line_.find_first_of(";}", pos_);
      if (value_end == std::string_view::npos) {
        pos_ = line_.size();
        fail("unterminated letter");
      }
      try {
        *slot = parse_exp_poly(line_.substr(value_start, value_end - value_start));
      } catch (const ParseError& e) {
        throw WordFileError(e.kind(), line_no_, value_start + e.offset() + 1,
                            e.message());
      }
      pos_ = value_end + 1;
      if (line_[value_end] == '}') break;
    }
    skip_ws();
    if (pos_ != line_.size()) fail("trailing characters after letter");

    if (g && xg) {
      pos_ = 0;
      fail("give either 'g' or 'xg', not both");
    }
    Poly fp;
    if (f) {
      auto as_poly = f->as_poly();
      if (!as_poly) {
        pos_ = f_col;
        fail("f must be a polynomial");
      }
      fp = std::move(*as_poly);
    }
    if (xg) {
      if (!xg->value_at_zero().is_zero()) {
        pos_ = 0;
        fail("xg must vanish at x = 0");
      }
      return {factor, O1Element::from_translation(std::move(fp), std::move(*xg))};
    }
    return {factor, O1Element(std::move(fp), g.value_or(ExpPoly{}))};
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw WordFileError(Kind::Syntax, line_no_, pos_ + 1, what);
  }

  void skip_ws() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  return line;
}

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

OSLetter parse_letter(std::string_view line) {
  return LetterParser(strip_comment(line), 1).parse();
}

std::vector<OSLetter> parse_word_file(std::string_view text) {
  std::vector<OSLetter> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = strip_comment(text.substr(start, end - start));
    if (!is_blank(line)) out.push_back(LetterParser(line, line_no).parse());
    start = end + 1;
  }
  return out;
}

std::string to_string(const OSLetter& l) {
  std::string out = l.factor == amalgam::Factor::First ? "O1{f=" : "O2{f=";
  out += to_string(l.elem.f());
  if (auto g = l.elem.g()) {
    out += "; g=" + to_string(*g);
  } else {
    out += "; xg=" + to_string(l.elem.translation());
  }
  out += "}";
  return out;
}

std::string to_string(const OSWord& w) {
  std::string out;
  for (const auto& l : w.letters()) out += to_string(l) + "\n";
  return out;
}

}  // namespace overshear
