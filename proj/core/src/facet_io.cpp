#include "srcolor/facet_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "srcolor/error.hpp"

namespace srcolor {

namespace {

constexpr std::string_view kVertexHeader = "vertices:";

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

SimplicialComplex parse_facets(std::string_view text) {
  std::optional<std::vector<std::string>> header;
  std::vector<std::vector<std::string>> facets;
  std::vector<int> facet_lines;

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      auto comment = split_words(line.substr(hash + 1));
      if (!header && !comment.empty() && comment.front() == kVertexHeader) {
        comment.erase(comment.begin());
        header = std::move(comment);
      }
      line = line.substr(0, hash);
    }
    auto words = split_words(line);
    if (words.empty()) continue;
    std::unordered_set<std::string> seen;
    for (const auto& w : words)
      if (!seen.insert(w).second)
        throw MalformedInputError("label '" + w + "' repeated within a facet", line_no);
    facets.push_back(std::move(words));
    facet_lines.push_back(line_no);
  }
  if (facets.empty()) throw MalformedInputError("empty complex: no facets in input");

  if (!header) return SimplicialComplex::from_facets(facets);
  std::unordered_set<std::string> listed(header->begin(), header->end());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (const auto& w : facets[i])
      if (!listed.contains(w))
        throw MalformedInputError("label '" + w + "' is not in the vertices header",
                                  facet_lines[i]);
  return SimplicialComplex::from_facets(*header, facets);
}

std::string render_facets(const SimplicialComplex& k) {
  std::string out = "# vertices:";
  for (const auto& l : k.vertices().labels()) out += " " + l;
  out += '\n';
  for (const auto& f : k.facets()) {
    if (f.empty()) continue;
    out += format_face(k, f);
    out += '\n';
  }
  return out;
}

SimplicialComplex read_facet_file(const std::string& path) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_facets(text);
  }
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_facets(text);
}

void write_facet_file(const SimplicialComplex& k, const std::string& path) {
  if (path == "-") {
    std::cout << render_facets(k);
    return;
  }
  std::ofstream out(path);
  if (!out) throw MalformedInputError("cannot write '" + path + "'");
  out << render_facets(k);
}

}  // namespace srcolor
