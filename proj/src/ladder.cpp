#include "laddermat/ladder.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "laddermat/error.hpp"

namespace laddermat {

bool dominates(IndexPair p, IndexPair q) { return p.row >= q.row && p.col <= q.col; }

bool contains(const IndexSet& set, IndexPair p) { return std::binary_search(set.begin(), set.end(), p); }

Ladder::Ladder(int n, std::vector<IndexPair> corners) : n_(n), corners_(std::move(corners)) {
  if (n_ < 1) throw InvalidLadder("size must be positive, got " + std::to_string(n_));
  for (std::size_t k = 0; k < corners_.size(); ++k) {
    const auto [i, j] = corners_[k];
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw InvalidLadder("corner (" + std::to_string(i) + "," + std::to_string(j) + ") outside [" +
                          std::to_string(n_) + "]x[" + std::to_string(n_) + "]");
    }
    if (k > 0 && (corners_[k - 1].row >= i || corners_[k - 1].col >= j)) {
      throw InvalidLadder("corner rows and columns must strictly increase");
    }
  }
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == s_.size();
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ladder Ladder::parse(std::string_view text) {
  Cursor cur(text);
  cur.expect('n');
  cur.expect('=');
  const int n = cur.integer();
  cur.expect(':');
  std::vector<IndexPair> corners;
  while (!cur.done()) {
    cur.expect('(');
    const int i = cur.integer();
    cur.expect(',');
    const int j = cur.integer();
    cur.expect(')');
    corners.push_back({i, j});
  }
  try {
    return Ladder(n, std::move(corners));
  } catch (const InvalidLadder& e) {
    throw ParseError(e.what());
  }
}

Ladder Ladder::from_json(const nlohmann::ordered_json& j) {
  try {
    std::vector<IndexPair> corners;
    for (const auto& c : j.at("corners")) corners.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return Ladder(j.at("n").get<int>(), std::move(corners));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ladder JSON: ") + e.what());
  }
}

std::string Ladder::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ":";
  for (const auto& [i, j] : corners_) os << " (" << i << "," << j << ")";
  return os.str();
}

nlohmann::ordered_json Ladder::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["corners"] = nlohmann::ordered_json::array();
  for (const auto& [r, c] : corners_) j["corners"].push_back({r, c});
  return j;
}

std::ostream& operator<<(std::ostream& os, const Ladder& l) { return os << l.to_string(); }

IndexSet index_set(const Ladder& ladder) {
  IndexSet out;
  const int n = ladder.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const IndexPair p{i, j};
      if (std::any_of(ladder.corners().begin(), ladder.corners().end(),
                      [&](IndexPair c) { return dominates(c, p); })) {
        out.push_back(p);
      }
    }
  }
  return out;
}

Ladder canonicalize(int n, const IndexSet& set) {
  IndexSet sorted = set;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& [i, j] : sorted) {
    if (i < 1 || i > n || j < 1 || j > n) throw NotALadderShape("index outside the square");
    if (i > 1 && !contains(sorted, {i - 1, j})) throw NotALadderShape("not closed upward");
    if (j < n && !contains(sorted, {i, j + 1})) throw NotALadderShape("not closed rightward");
  }
  std::vector<IndexPair> corners;
  for (const auto& [i, j] : sorted) {
    if (!contains(sorted, {i + 1, j}) && !contains(sorted, {i, j - 1})) corners.push_back({i, j});
  }
  return Ladder(n, std::move(corners));
}

}  // namespace laddermat
