#include "quatype/reference_tables.hpp"

#include <sstream>
#include <stdexcept>

namespace quatype {

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows split_rows(const char* const (&lines)[15]) {
  Rows rows;
  for (const char* line : lines) {
    std::istringstream in(line);
    std::vector<std::string> row;
    for (std::string cell; in >> cell;) row.push_back(cell);
    if (row.size() != 15) throw std::logic_error("reference table row must have 15 cells");
    rows.push_back(std::move(row));
  }
  return rows;
}

// clang-format off
constexpr const char* kGenericRows[15] = {
    "E   I   J   K   EI  EJ  EK  IJ  IK  JK  EIJ EIK EJK IJK A",
    "I   E   K   J   EI  IK  IJ  EK  EJ  JK  EIK EIJ IJK EJK A",
    "J   K   E   I   JK  EJ  IJ  EK  IK  EI  EJK IJK EIJ EIK A",
    "K   J   I   E   JK  IK  EK  IJ  EJ  EI  IJK EJK EIK EIJ A",
    "EI  EI  JK  JK  EI  A   A   A   A   JK  A   A   A   A   A",
    "EJ  EJ  EJ  EJ  EJ  A   A   A   A   IK  A   A   A   A   A",
    "EK  EK  IJ  IJ  EK  A   A   EK  IJ  A   A   A   A   A   A",
    "IJ  IJ  EK  EK  IJ  A   A   IJ  EK  A   A   A   A   A   A",
    "IK  IK  EJ  EJ  A   IK  A   A   EJ  A   A   A   A   A   A",
    "JK  JK  EI  EI  JK  A   A   A   A   EI  A   A   A   A   A",
    "EIJ EIK EJK IJK A   A   A   A   A   A   A   A   A   A   A",
    "EIK EIJ IJK EJK A   A   A   A   A   A   A   A   A   A   A",
    "EJK IJK EIJ EIK A   A   A   A   A   A   A   A   A   A   A",
    "IJK EJK EIK EIJ A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
};

constexpr const char* kAnticommutatorRows[15] = {
    "0   1   2   3   01  02  03  12  13  23  012 013 023 123 A",
    "1   0   3   2   01  13  12  03  02  23  013 012 123 023 A",
    "2   3   0   1   23  02  12  03  13  01  023 123 012 013 A",
    "3   2   1   0   23  13  03  12  02  01  123 023 013 012 A",
    "01  01  23  23  01  A   A   A   A   23  A   A   A   A   A",
    "02  13  02  13  A   02  A   A   13  A   A   A   A   A   A",
    "03  12  12  03  A   A   03  12  A   A   A   A   A   A   A",
    "12  03  03  12  A   A   12  03  A   A   A   A   A   A   A",
    "13  02  13  02  A   13  A   A   02  A   A   A   A   A   A",
    "23  23  01  01  23  A   A   A   A   01  A   A   A   A   A",
    "012 013 023 123 A   A   A   A   A   A   A   A   A   A   A",
    "013 012 123 023 A   A   A   A   A   A   A   A   A   A   A",
    "023 123 012 013 A   A   A   A   A   A   A   A   A   A   A",
    "123 023 013 012 A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
};

constexpr const char* kProductRows[15] = {
    "02  13  02  13  A   02  A   A   13  A   A   A   A   A   A",
    "13  02  13  02  A   13  A   A   02  A   A   A   A   A   A",
    "02  13  02  13  A   02  A   A   13  A   A   A   A   A   A",
    "13  02  13  02  A   13  A   A   02  A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "02  13  02  13  A   02  A   A   13  A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "13  02  13  02  A   13  A   A   02  A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
    "A   A   A   A   A   A   A   A   A   A   A   A   A   A   A",
};
// clang-format on

QType decode_label(const std::string& label) {
  if (label == "A") return QType::full();
  std::uint8_t bits = 0;
  for (char c : label) {
    switch (c) {
      case 'E': case '0': bits |= 1; break;
      case 'I': case '1': bits |= 2; break;
      case 'J': case '2': bits |= 4; break;
      case 'K': case '3': bits |= 8; break;
      default: throw std::logic_error("bad reference table label: " + label);
    }
  }
  return QType::from_bits(bits);
}

}  // namespace

std::string reference_table_name(ReferenceTable table) {
  switch (table) {
    case ReferenceTable::GenericQuaternion:
      return "generic";
    case ReferenceTable::Anticommutator:
      return "anticommutator";
    case ReferenceTable::Product:
      return "product";
  }
  return "?";
}

OpKind reference_table_op(ReferenceTable table) {
  return table == ReferenceTable::Product ? OpKind::GeometricProduct : OpKind::Anticommutator;
}

const std::vector<std::vector<std::string>>& reference_table_labels(ReferenceTable table) {
  static const Rows generic = split_rows(kGenericRows);
  static const Rows anticommutator = split_rows(kAnticommutatorRows);
  static const Rows product = split_rows(kProductRows);
  switch (table) {
    case ReferenceTable::GenericQuaternion:
      return generic;
    case ReferenceTable::Anticommutator:
      return anticommutator;
    case ReferenceTable::Product:
      break;
  }
  return product;
}

TypeTable reference_table(ReferenceTable table) {
  const auto& labels = reference_table_labels(table);
  TypeTable out{};
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) out[i][j] = decode_label(labels[i][j]);
  }
  return out;
}

std::vector<TableDiscrepancy> table_discrepancies(ReferenceTable table) {
  const auto& labels = reference_table_labels(table);
  const TypeTable printed = reference_table(table);
  const TypeTable derived = emit_table(reference_table_op(table));
  std::vector<TableDiscrepancy> out;
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      if (printed[i][j] != derived[i][j]) {
        out.push_back({table, i, j, labels[i][j], printed[i][j], derived[i][j]});
      }
    }
  }
  return out;
}

std::vector<TableDiscrepancy> all_table_discrepancies() {
  std::vector<TableDiscrepancy> out;
  for (auto t : {ReferenceTable::GenericQuaternion, ReferenceTable::Anticommutator,
                 ReferenceTable::Product}) {
    auto part = table_discrepancies(t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string type_label(QType t, ReferenceTable style) {
  if (t == QType::full()) return "A";
  if (style != ReferenceTable::GenericQuaternion) return t.to_string();
  static constexpr char kRoles[] = {'E', 'I', 'J', 'K'};
  std::string out;
  for (int r = 0; r < 4; ++r) {
    if (t.contains(r)) out += kRoles[r];
  }
  return out;
}

}  // namespace quatype
