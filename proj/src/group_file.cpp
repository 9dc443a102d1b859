#include <fstream>
#include <functional>
#include <sstream>

#include "fj/constructions.hpp"
#include "fj/error.hpp"

namespace fj {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& raw) {
  auto s = raw.substr(0, raw.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<long> numbers(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) parse_error(line, "bad number '" + tok + "'");
    } catch (const std::logic_error&) {
      parse_error(line, "bad number '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

GroupSpec parse_group_text(std::string_view text, const std::string& label) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
      ++no;
      auto s = strip(raw);
      if (!s.empty()) lines.emplace_back(no, std::move(s));
    }
  }
  if (lines.empty()) parse_error(1, "empty group file");

  std::istringstream head(lines[0].second);
  std::string kind;
  head >> kind;
  const auto header = numbers(lines[0].second.substr(kind.size()), lines[0].first);
  std::size_t pos = 1;

  GroupSpec spec;
  spec.label = label;
  std::function<GroupElement(const std::string&, std::size_t)> element;

  if (kind == "perm") {
    if (header.size() != 1 || header[0] < 1 || header[0] > 65535) parse_error(lines[0].first, "expected 'perm <n>'");
    auto be = std::make_shared<const PermutationBackend>(static_cast<std::size_t>(header[0]));
    element = [be](const std::string& data, std::size_t line) {
      try {
        return be->parse_cycles(data);
      } catch (const Error& e) {
        parse_error(line, e.what());
      }
    };
    spec.backend = be;
  } else if (kind == "mat") {
    if (header.size() != 2) parse_error(lines[0].first, "expected 'mat <q> <n>'");
    const long q = header[0], n = header[1];
    if (q != 2 && q != 3 && q != 4) parse_error(lines[0].first, "field order must be 2, 3 or 4");
    if (n < 1 || n > 64) parse_error(lines[0].first, "bad matrix dimension");
    auto be = std::make_shared<const MatrixBackend>(static_cast<int>(q), static_cast<std::size_t>(n));
    element = [be, q, n](const std::string& data, std::size_t line) {
      const auto v = numbers(data, line);
      if (v.size() != static_cast<std::size_t>(n * n)) parse_error(line, "expected " + std::to_string(n * n) + " entries");
      std::vector<std::uint8_t> entries;
      for (auto x : v) {
        if (x < 0 || x >= q) parse_error(line, "entry out of field range");
        entries.push_back(static_cast<std::uint8_t>(x));
      }
      try {
        return be->from_entries(entries);
      } catch (const Error& e) {
        parse_error(line, e.what());
      }
    };
    spec.backend = be;
  } else if (kind == "table") {
    if (header.size() != 1 || header[0] < 1 || header[0] > 65535) parse_error(lines[0].first, "expected 'table <k>'");
    const auto k = static_cast<std::size_t>(header[0]);
    if (lines.size() < 1 + k) parse_error(lines.back().first, "multiplication table is incomplete");
    std::vector<std::vector<std::uint16_t>> rows;
    for (std::size_t r = 0; r < k; ++r, ++pos) {
      const auto v = numbers(lines[pos].second, lines[pos].first);
      if (v.size() != k) parse_error(lines[pos].first, "table row needs " + std::to_string(k) + " entries");
      std::vector<std::uint16_t> row;
      for (auto x : v) {
        if (x < 0 || static_cast<std::size_t>(x) >= k) parse_error(lines[pos].first, "table entry out of range");
        row.push_back(static_cast<std::uint16_t>(x));
      }
      rows.push_back(std::move(row));
    }
    std::shared_ptr<const MultTable> table;
    try {
      table = std::make_shared<const MultTable>(std::move(rows));
    } catch (const Error& e) {
      parse_error(lines[1].first, e.what());
    }
    auto be = std::make_shared<const TableBackend>(table);
    element = [be, k](const std::string& data, std::size_t line) {
      const auto v = numbers(data, line);
      if (v.size() != 1 || v[0] < 0 || static_cast<std::size_t>(v[0]) >= k) parse_error(line, "expected a table index");
      return be->element(static_cast<std::uint16_t>(v[0]));
    };
    spec.backend = be;
  } else {
    parse_error(lines[0].first, "unknown group kind '" + kind + "'");
  }

  bool have_seed = false;
  for (; pos < lines.size(); ++pos) {
    const auto& [no, s] = lines[pos];
    if (have_seed) parse_error(no, "content after the seed line");
    const auto space = s.find_first_of(" \t");
    const auto key = s.substr(0, space);
    const auto data = space == std::string::npos ? std::string() : strip(s.substr(space));
    if (data.empty()) parse_error(no, "missing element data");
    if (key == "gen") {
      spec.generators.push_back(element(data, no));
    } else if (key == "seed") {
      spec.seed = element(data, no);
      have_seed = true;
    } else {
      parse_error(no, "expected 'gen' or 'seed'");
    }
  }
  if (!have_seed) parse_error(lines.back().first, "missing seed line");
  if (spec.backend->is_identity(spec.seed) || small_order(*spec.backend, spec.seed) != 2) {
    throw Error(ErrorKind::NotInvolution, "seed does not have order 2");
  }
  return spec;
}

GroupSpec load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path);
}

}  // namespace fj
