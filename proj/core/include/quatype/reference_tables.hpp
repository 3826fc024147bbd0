#pragma once

#include <string>
#include <vector>

#include "quatype/qtype.hpp"

namespace quatype {

// Hand-transcribed composition tables as they circulate in the literature,
// kept verbatim (including cells that contradict the composition rules) so
// the rule-derived tables can be diffed against them.
enum class ReferenceTable {
  // Abstract E/I/J/K table of an algebra of quaternion type; compared with
  // the anticommutator rules under E=0̄, I=1̄, J=2̄, K=3̄.
  GenericQuaternion,
  Anticommutator,
  Product,
};

std::string reference_table_name(ReferenceTable table);
OpKind reference_table_op(ReferenceTable table);

// Cell labels exactly as printed ("EJ", "02", "A", ...), in kTableOrder.
const std::vector<std::vector<std::string>>& reference_table_labels(ReferenceTable table);

// Printed cells decoded into residue types.
TypeTable reference_table(ReferenceTable table);

struct TableDiscrepancy {
  ReferenceTable table;
  int row;  // index into kTableOrder
  int column;
  std::string printed;  // label as printed
  QType printed_type;
  QType derived_type;
};

std::vector<TableDiscrepancy> table_discrepancies(ReferenceTable table);
std::vector<TableDiscrepancy> all_table_discrepancies();

// Residue label ("02") or role label ("EJ") of a type; "A" for the full type.
std::string type_label(QType t, ReferenceTable style);

}  // namespace quatype
