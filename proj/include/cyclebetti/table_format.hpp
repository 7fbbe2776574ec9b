#pragma once

// Text, JSON and CSV renderings of graded Betti tables.

#include <cstdint>
#include <optional>
#include <string>

#include "cyclebetti/oracle.hpp"

namespace cyclebetti {

enum class TableFormat { Text, Json, Csv };

struct TableContext {
  int ambient = 0;
  /// Field characteristic, when the table came from a field computation.
  std::optional<std::uint64_t> characteristic;
};

/// Text layout: columns by i, rows by j - i, a total row, '.' for zeros,
/// then pd and reg lines. Throws InvalidParameter on an empty table.
std::string emit_betti_table(const GradedBettiTable& table, TableFormat format, const TableContext& context = {});

TableFormat parse_table_format(const std::string& name);

}  // namespace cyclebetti
