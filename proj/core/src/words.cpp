#include "strmod/words.hpp"

#include <algorithm>
#include <sstream>

namespace strmod {

char Letter::to_char() const {
  if (sym == Sym::X)
    return dir == Dir::Direct ? 'x' : 'X';
  return dir == Dir::Direct ? 'y' : 'Y';
}

int Letter::rank() const {
  // x < y < x- < y-
  return (dir == Dir::Direct ? 0 : 2) + (sym == Sym::X ? 0 : 1);
}

Letter Letter::from_char(char c) {
  switch (c) {
  case 'x':
    return {Sym::X, Dir::Direct};
  case 'y':
    return {Sym::Y, Dir::Direct};
  case 'X':
    return {Sym::X, Dir::Inverse};
  case 'Y':
    return {Sym::Y, Dir::Inverse};
  default:
    throw UsageError(std::string("not a letter: ") + c);
  }
}

bool adjacent_ok(const Letter& a, const Letter& b) {
  if (a.sym != b.sym)
    return a.dir == b.dir ? false : true; // xy, yx, x-y-, y-x- forbidden
  return a.dir == b.dir; // aa fine, backtracking aa-, a-a forbidden
}

namespace {

std::string pair_text(const Letter& a, const Letter& b) {
  std::string s;
  s += a.to_char();
  s += b.to_char();
  return s;
}

void check_pair(const Letter& a, const Letter& b) {
  if (!adjacent_ok(a, b)) {
    const bool backtrack = a.sym == b.sym;
    throw DomainError(std::string(backtrack ? "backtracking" : "forbidden") +
                      " pair \"" + pair_text(a, b) + "\"");
  }
}

} // namespace

StringWord::StringWord(std::optional<Letter> left_tail, std::vector<Letter> core,
                       std::optional<Letter> right_tail)
    : left_(left_tail), core_(std::move(core)), right_(right_tail) {
  // absorb core letters that extend a tail
  if (left_)
    while (!core_.empty() && core_.front() == *left_)
      core_.erase(core_.begin());
  if (right_)
    while (!core_.empty() && core_.back() == *right_)
      core_.pop_back();
  // a lone tail is kept on the right
  if (core_.empty() && left_ && !right_) {
    right_ = left_->inverted();
    left_.reset();
  }
  // adjacency, including tail boundaries; a tail is self-adjacent
  if (left_)
    check_pair(*left_, *left_);
  if (right_)
    check_pair(*right_, *right_);
  for (std::size_t i = 0; i + 1 < core_.size(); ++i)
    check_pair(core_[i], core_[i + 1]);
  if (left_ && !core_.empty())
    check_pair(*left_, core_.front());
  if (right_ && !core_.empty())
    check_pair(core_.back(), *right_);
  if (left_ && right_ && core_.empty())
    check_pair(*left_, *right_);
}

StringWord StringWord::empty() { return StringWord(std::nullopt, {}, std::nullopt); }

StringWord StringWord::finite(std::vector<Letter> core) {
  return StringWord(std::nullopt, std::move(core), std::nullopt);
}

int StringWord::vertex_count() const {
  if (!is_finite())
    throw UsageError("vertex count of an infinite word");
  return core_size() + 1;
}

bool StringWord::has_letter_at(int j) const {
  if (j < 0)
    return left_.has_value();
  if (j < core_size())
    return true;
  return right_.has_value();
}

Letter StringWord::letter_at(int j) const {
  if (j < 0) {
    if (!left_)
      throw UsageError("letter index in a missing left tail");
    return *left_;
  }
  if (j < core_size())
    return core_[static_cast<std::size_t>(j)];
  if (!right_)
    throw UsageError("letter index past the end of a finite word");
  return *right_;
}

PeriodicWord::PeriodicWord(std::vector<Letter> cycle) : cycle_(std::move(cycle)) {
  const int n = static_cast<int>(cycle_.size());
  if (n < 2)
    throw DomainError("cyclic word needs at least two letters");
  for (int i = 0; i < n; ++i) {
    const Letter& a = cycle_[static_cast<std::size_t>(i)];
    const Letter& b = cycle_[static_cast<std::size_t>((i + 1) % n)];
    if (!adjacent_ok(a, b))
      throw DomainError(std::string("cyclic ") +
                        (a.sym == b.sym ? "backtracking" : "forbidden") +
                        " pair \"" + pair_text(a, b) + "\" at position " +
                        std::to_string(i));
  }
  bool has_x = false, has_y = false;
  for (const Letter& l : cycle_)
    (l.sym == Sym::X ? has_x : has_y) = true;
  if (!has_x || !has_y)
    throw DomainError("cyclic word must contain both x- and y-letters");
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    bool power = true;
    for (int i = 0; power && i < n; ++i)
      if (!(cycle_[static_cast<std::size_t>(i)] ==
            cycle_[static_cast<std::size_t>(i % d)]))
        power = false;
    if (power)
      throw DomainError("cyclic word is a proper power of period " +
                        std::to_string(d));
  }
}

// -- parsing -------------------------------------------------------------------

namespace {

struct Token {
  Letter letter;
  bool has_inf;
  std::size_t position;
};

// letters with optional "^inf", whitespace ignored
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'y' && c != 'X' && c != 'Y')
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    Token t{Letter::from_char(c), false, i};
    ++i;
    // optional ^inf (whitespace may not split the marker itself)
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 4) != "^inf")
        throw ParseError("expected \"^inf\"", i);
      t.has_inf = true;
      i += 4;
    }
    out.push_back(t);
  }
  return out;
}

StringWord word_from_tokens(const std::vector<Token>& toks) {
  std::optional<Letter> left, right;
  std::size_t begin = 0, end = toks.size();
  // trailing tail first, so a lone "a^inf" reads as a right tail
  if (end > begin && toks[end - 1].has_inf) {
    right = toks[end - 1].letter;
    --end;
  }
  if (end > begin && toks[begin].has_inf) {
    left = toks[begin].letter;
    begin += 1;
  }
  std::vector<Letter> core;
  for (std::size_t i = begin; i < end; ++i) {
    if (toks[i].has_inf)
      throw ParseError("\"^inf\" is only allowed on the first or last letter",
                       toks[i].position);
    core.push_back(toks[i].letter);
  }
  // report validity failures with a position where possible
  try {
    return StringWord(left, std::move(core), right);
  } catch (const DomainError& e) {
    // find the first offending adjacent token pair for the offset
    for (std::size_t i = 0; i + 1 < toks.size(); ++i)
      if (!adjacent_ok(toks[i].letter, toks[i + 1].letter))
        throw ParseError(e.what(), toks[i + 1].position);
    throw ParseError(e.what(), 0);
  }
}

std::size_t skip_ws(std::string_view text, std::size_t i) {
  while (i < text.size() &&
         (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
    ++i;
  return i;
}

bool looks_like_band(std::string_view text) {
  return text.substr(skip_ws(text, 0), 5).substr(0, 5) == "band(";
}

} // namespace

StringWord parse_word(std::string_view text) {
  if (looks_like_band(text))
    throw ParseError("\"band(...)\" is a cyclic word, not a string word",
                     skip_ws(text, 0));
  return word_from_tokens(tokenize(text));
}

PeriodicWord parse_band(std::string_view text) {
  std::size_t i = skip_ws(text, 0);
  if (text.substr(i, 5) != "band(")
    throw ParseError("expected \"band(\"", i);
  const std::size_t open = i + 5;
  const std::size_t close = text.rfind(')');
  if (close == std::string_view::npos || close < open)
    throw ParseError("missing ')'", text.size());
  if (skip_ws(text, close + 1) != text.size())
    throw ParseError("trailing input after ')'", close + 1);
  const auto toks = tokenize(text.substr(open, close - open));
  std::vector<Letter> cycle;
  for (const Token& t : toks) {
    if (t.has_inf)
      throw ParseError("\"^inf\" is not allowed inside band(...)",
                       open + t.position);
    cycle.push_back(t.letter);
  }
  try {
    return PeriodicWord(std::move(cycle));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), open);
  }
}

std::string serialize(const StringWord& w) {
  std::vector<std::string> pieces;
  if (w.left_tail())
    pieces.push_back(std::string(1, w.left_tail()->to_char()) + "^inf");
  if (!w.core().empty()) {
    std::string s;
    for (const Letter& l : w.core())
      s += l.to_char();
    pieces.push_back(s);
  }
  if (w.right_tail())
    pieces.push_back(std::string(1, w.right_tail()->to_char()) + "^inf");
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i)
      out += ' ';
    out += pieces[i];
  }
  return out;
}

std::string serialize(const PeriodicWord& pw) {
  std::string out = "band(";
  for (const Letter& l : pw.cycle())
    out += l.to_char();
  out += ')';
  return out;
}

ValidationReport validate(std::string_view text) {
  try {
    if (looks_like_band(text))
      parse_band(text);
    else
      parse_word(text);
    return {true, "", std::nullopt};
  } catch (const ParseError& e) {
    return {false, e.what(), e.position()};
  } catch (const DomainError& e) {
    return {false, e.what(), std::nullopt};
  }
}

// -- involutions ----------------------------------------------------------------

StringWord inverse_word(const StringWord& w) {
  std::optional<Letter> l, r;
  if (w.left_tail())
    l = w.left_tail()->inverted();
  if (w.right_tail())
    r = w.right_tail()->inverted();
  std::vector<Letter> core;
  core.reserve(w.core().size());
  for (const Letter& c : w.core())
    core.push_back(c.inverted());
  return StringWord(l, std::move(core), r);
}

PeriodicWord inverse_word(const PeriodicWord& pw) {
  std::vector<Letter> cycle;
  cycle.reserve(pw.cycle().size());
  for (const Letter& c : pw.cycle())
    cycle.push_back(c.inverted());
  return PeriodicWord(std::move(cycle));
}

StringWord reverse_inverse(const StringWord& w) {
  std::optional<Letter> l, r;
  if (w.right_tail())
    l = w.right_tail()->inverted();
  if (w.left_tail())
    r = w.left_tail()->inverted();
  std::vector<Letter> core;
  core.reserve(w.core().size());
  for (auto it = w.core().rbegin(); it != w.core().rend(); ++it)
    core.push_back(it->inverted());
  return StringWord(l, std::move(core), r);
}

namespace {

// tails before cores; absent tail sorts first
std::vector<int> order_key(const StringWord& w) {
  std::vector<int> key;
  key.push_back(w.left_tail() ? 1 + w.left_tail()->rank() : 0);
  key.push_back(w.right_tail() ? 1 + w.right_tail()->rank() : 0);
  for (const Letter& l : w.core())
    key.push_back(l.rank());
  return key;
}

} // namespace

StringWord canonical_form(const StringWord& w) {
  const StringWord r = reverse_inverse(w);
  return order_key(r) < order_key(w) ? r : w;
}

// -- cuts ------------------------------------------------------------------------

ConcatSplitResult cut_at(const StringWord& w, int j) {
  if (!w.has_letter_at(j))
    throw UsageError("cut index out of range: " + std::to_string(j));
  const Letter conn = w.letter_at(j);
  const int n = w.core_size();

  StringWord left = StringWord::empty(), right = StringWord::empty();
  if (j < 0) {
    // inside the left tail: -1 is adjacent to the core
    std::vector<Letter> rcore(static_cast<std::size_t>(-j - 1), *w.left_tail());
    rcore.insert(rcore.end(), w.core().begin(), w.core().end());
    left = StringWord(w.left_tail(), {}, std::nullopt);
    right = StringWord(std::nullopt, std::move(rcore), w.right_tail());
  } else if (j < n) {
    std::vector<Letter> lcore(w.core().begin(), w.core().begin() + j);
    std::vector<Letter> rcore(w.core().begin() + j + 1, w.core().end());
    left = StringWord(w.left_tail(), std::move(lcore), std::nullopt);
    right = StringWord(std::nullopt, std::move(rcore), w.right_tail());
  } else {
    std::vector<Letter> lcore = w.core();
    lcore.insert(lcore.end(), static_cast<std::size_t>(j - n), *w.right_tail());
    left = StringWord(w.left_tail(), std::move(lcore), std::nullopt);
    right = StringWord(std::nullopt, {}, w.right_tail());
  }

  if (conn.is_inverse())
    return {left, right, conn, ConnectorOrientation::InverseConnector};
  return {right, left, conn, ConnectorOrientation::DirectConnector};
}

ConcatSplitResult concat_split(const StringWord& w, int j) {
  if (j < 0 || j >= w.core_size()) {
    if (w.has_letter_at(j))
      throw UsageError("concat_split index lies inside a tail: " +
                       std::to_string(j));
    throw UsageError("concat_split index out of range: " + std::to_string(j));
  }
  return cut_at(w, j);
}

StringWord truncate_end(const StringWord& w, int depth) {
  if (depth < 0)
    throw UsageError("negative truncation depth");
  if (w.is_finite())
    return w;
  std::vector<Letter> core;
  if (w.left_tail())
    core.assign(static_cast<std::size_t>(depth), *w.left_tail());
  core.insert(core.end(), w.core().begin(), w.core().end());
  if (w.right_tail())
    core.insert(core.end(), static_cast<std::size_t>(depth), *w.right_tail());
  return StringWord::finite(std::move(core));
}

// -- enumeration -------------------------------------------------------------------

namespace {

const Letter kAllLetters[4] = {
    {Sym::X, Dir::Direct}, {Sym::Y, Dir::Direct},
    {Sym::X, Dir::Inverse}, {Sym::Y, Dir::Inverse}};

void extend_cores(std::vector<Letter>& cur, int remaining,
                  std::vector<std::vector<Letter>>& out) {
  out.push_back(cur);
  if (remaining == 0)
    return;
  for (const Letter& l : kAllLetters) {
    if (!cur.empty() && !adjacent_ok(cur.back(), l))
      continue;
    cur.push_back(l);
    extend_cores(cur, remaining - 1, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<Letter>> enumerate_valid_cores(int max_len) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> cur;
  extend_cores(cur, max_len, out);
  return out;
}

std::vector<StringWord> enumerate_finite_words(int max_letters) {
  std::vector<StringWord> out;
  for (auto& core : enumerate_valid_cores(max_letters))
    out.push_back(StringWord::finite(std::move(core)));
  return out;
}

std::vector<StringWord> enumerate_words(int max_core) {
  std::vector<StringWord> out;
  for (const auto& core : enumerate_valid_cores(max_core)) {
    for (int li = 0; li <= 4; ++li) {
      for (int ri = 0; ri <= 4; ++ri) {
        std::optional<Letter> lt, rt;
        if (li > 0)
          lt = kAllLetters[li - 1];
        if (ri > 0)
          rt = kAllLetters[ri - 1];
        // skip spellings the canonical constructor would rewrite
        if (lt && !core.empty() && core.front() == *lt)
          continue;
        if (rt && !core.empty() && core.back() == *rt)
          continue;
        if (lt && !rt && core.empty())
          continue; // lone tails are canonical on the right
        try {
          out.emplace_back(lt, core, rt);
        } catch (const DomainError&) {
          // invalid tail combination
        }
      }
    }
  }
  return out;
}

} // namespace strmod
