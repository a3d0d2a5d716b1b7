#include "polydiff/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polydiff {

MatrixFormat parse_format(std::string_view name) {
  if (name == "csv") return MatrixFormat::csv;
  if (name == "json") return MatrixFormat::json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

std::vector<std::string> split_list(std::string_view text) {
  std::string body;
  if (!text.empty() && text.front() == '@') {
    const std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read list file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
    for (char& c : body) {
      if (std::isspace(static_cast<unsigned char>(c))) c = ',';
    }
  } else {
    body = text;
  }
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw std::invalid_argument("empty list");
  return items;
}

std::string matrix_to_csv(const AnyMatrix& m) {
  return std::visit(
      [](const auto& mat) {
        std::string out;
        for (std::size_t i = 0; i < mat.rows(); ++i) {
          for (std::size_t j = 0; j < mat.cols(); ++j) {
            if (j > 0) out += ',';
            out += to_string(mat(i, j));
          }
          out += '\n';
        }
        return out;
      },
      m);
}

namespace {

nlohmann::json entry_json(const Rational& q) { return to_string(q); }
nlohmann::json entry_json(const Complex& z) { return to_string(z); }
nlohmann::json entry_json(double x) {
  if (std::isfinite(x)) return x;
  return to_string(x);
}

}  // namespace

std::string matrix_to_json(const AnyMatrix& m, std::string_view basis) {
  nlohmann::json doc;
  doc["basis"] = std::string(basis);
  doc["field"] = std::string(field_name(field_of(m)));
  std::visit(
      [&doc](const auto& mat) {
        doc["dimension"] = mat.rows();
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < mat.rows(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (std::size_t j = 0; j < mat.cols(); ++j) row.push_back(entry_json(mat(i, j)));
          rows.push_back(std::move(row));
        }
        doc["entries"] = std::move(rows);
      },
      m);
  return doc.dump() + "\n";
}

void write_matrix(std::ostream& out, const AnyMatrix& m, std::string_view basis, MatrixFormat format) {
  out << (format == MatrixFormat::csv ? matrix_to_csv(m) : matrix_to_json(m, basis));
}

}  // namespace polydiff
