#include "steiner3/gens_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "steiner3/error.hpp"

namespace steiner3 {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("generators line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_numbers(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != ',' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Permutation parse_image_list(std::string_view body, std::size_t degree, std::size_t line) {
  std::vector<Point> images;
  for (auto tok : split_numbers(body)) images.push_back(static_cast<Point>(parse_uint(tok, line)));
  if (images.size() != degree) fail(line, "image list has " + std::to_string(images.size()) + " entries, expected " + std::to_string(degree));
  try {
    return Permutation(std::move(images));
  } catch (const InvalidArgument&) {
    fail(line, "image list is not a bijection");
  }
}

Permutation parse_cycles(std::string_view body, std::size_t degree, std::size_t line) {
  std::vector<Point> images(degree);
  std::vector<bool> used(degree, false);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ' ' || body[pos] == '\t') {
      ++pos;
      continue;
    }
    if (body[pos] != '(') fail(line, "expected '(' in cycle notation");
    const auto close = body.find(')', pos);
    if (close == std::string_view::npos) fail(line, "unterminated cycle");
    std::vector<Point> cycle;
    for (auto tok : split_numbers(body.substr(pos + 1, close - pos - 1))) {
      const auto x = parse_uint(tok, line);
      if (x < 1 || x > degree) fail(line, "cycle point " + std::to_string(x) + " out of range 1.." + std::to_string(degree));
      if (used[x - 1]) fail(line, "point " + std::to_string(x) + " repeated in cycle notation");
      used[x - 1] = true;
      cycle.push_back(static_cast<Point>(x - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

}  // namespace

GeneratorSet parse_generators(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!degree) {
      if (line.substr(0, 7) != "degree:") fail(line_no, "first entry must be 'degree: n'");
      degree = parse_uint(trim(line.substr(7)), line_no);
      continue;
    }
    if (line.substr(0, 4) == "img:") {
      gens.push_back(parse_image_list(line.substr(4), *degree, line_no));
    } else if (line.front() == '(') {
      gens.push_back(parse_cycles(line, *degree, line_no));
    } else {
      fail(line_no, "unrecognised permutation syntax");
    }
  }
  if (!degree) throw FormatError("generators: missing 'degree: n' header");
  return GeneratorSet(*degree, std::move(gens));
}

GeneratorSet read_generators(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open generator file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generators(buf.str());
}

std::string format_generators(const GeneratorSet& group) {
  std::string out = "degree: " + std::to_string(group.degree) + "\n";
  for (const auto& g : group.gens) {
    out += "img: ";
    for (std::size_t i = 0; i < g.degree(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(g(static_cast<Point>(i)));
    }
    out += '\n';
  }
  return out;
}

void write_generators(const std::filesystem::path& path, const GeneratorSet& group) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write generator file " + path.string());
  out << format_generators(group);
}

}  // namespace steiner3
