#include "modelcore/lp_format.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

namespace modelcore {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

namespace {

class LpEmitter {
 public:
  LpEmitter(const ReferenceBackend& backend, std::string& out) : backend_(backend), out_(out) {
    const auto& columns = backend.columns();
    names_.reserve(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      names_.push_back(columns[i].name.empty() ? "x" + std::to_string(i) : columns[i].name);
    }
  }

  void emit() {
    out_ += "\\ LP format\n";
    emit_objective();
    emit_constraints();
    emit_bounds();
    emit_integrality();
    emit_sos();
    out_ += "End\n";
  }

 private:
  // Signed term separator; the first term of an expression carries only a
  // leading "- " when negative.
  void emit_sign(double coefficient, bool& first) {
    if (first) {
      if (coefficient < 0) out_ += "- ";
      first = false;
    } else {
      out_ += coefficient < 0 ? " - " : " + ";
    }
  }

  void emit_magnitude(double coefficient) {
    const double magnitude = std::abs(coefficient);
    if (magnitude != 1.0) {
      out_ += format_number(magnitude);
      out_ += ' ';
    }
  }

  void emit_linear(const DenseLinearPart& part, bool& first) {
    for (std::size_t i = 0; i < part.columns.size(); ++i) {
      emit_sign(part.coefficients[i], first);
      emit_magnitude(part.coefficients[i]);
      out_ += names_[part.columns[i]];
    }
  }

  void emit_quadratic(const std::vector<DenseQuadraticEntry>& entries, double scale, bool& first) {
    if (entries.empty()) return;
    out_ += first ? "[ " : " + [ ";
    bool inner_first = true;
    for (const DenseQuadraticEntry& entry : entries) {
      const double coefficient = entry.coefficient * scale;
      emit_sign(coefficient, inner_first);
      emit_magnitude(coefficient);
      out_ += names_[entry.column_1];
      if (entry.column_1 == entry.column_2) {
        out_ += " ^2";
      } else {
        out_ += " * ";
        out_ += names_[entry.column_2];
      }
    }
    out_ += " ]";
    first = false;
  }

  static std::string_view sense_token(ConstraintSense sense) {
    switch (sense) {
      case ConstraintSense::LessEqual:
        return " <= ";
      case ConstraintSense::Equal:
        return " = ";
      case ConstraintSense::GreaterEqual:
        return " >= ";
    }
    return " = ";
  }

  void emit_row_label(const std::string& name, char prefix, std::size_t row) {
    out_ += ' ';
    if (name.empty()) {
      out_ += prefix;
      out_ += std::to_string(row);
    } else {
      out_ += name;
    }
    out_ += ": ";
  }

  // A row with no terms still needs a variable on its left-hand side.
  void emit_empty_lhs(bool first) {
    if (!first) return;
    out_ += '0';
    if (!names_.empty()) {
      out_ += ' ';
      out_ += names_.front();
    }
  }

  void emit_objective() {
    const DenseObjective& objective = backend_.objective();
    out_ += objective.sense == ObjectiveSense::Minimize ? "Minimize\n" : "Maximize\n";
    out_ += " obj: ";
    bool first = true;
    emit_linear(objective.linear, first);
    if (!objective.quadratic.empty()) {
      emit_quadratic(objective.quadratic, 2.0, first);
      out_ += " / 2";
    }
    if (objective.constant != 0.0 || first) {
      emit_sign(objective.constant, first);
      out_ += format_number(std::abs(objective.constant));
    }
    out_ += '\n';
  }

  void emit_constraints() {
    out_ += "Subject To\n";
    const auto& linear_rows = backend_.linear_rows();
    for (std::size_t r = 0; r < linear_rows.size(); ++r) {
      const DenseLinearRow& row = linear_rows[r];
      emit_row_label(row.name, 'c', r);
      bool first = true;
      emit_linear(row.linear, first);
      emit_empty_lhs(first);
      out_ += sense_token(row.sense);
      out_ += format_number(row.rhs);
      out_ += '\n';
    }
    const auto& quadratic_rows = backend_.quadratic_rows();
    for (std::size_t r = 0; r < quadratic_rows.size(); ++r) {
      const DenseQuadraticRow& row = quadratic_rows[r];
      emit_row_label(row.name, 'q', r);
      bool first = true;
      emit_linear(row.linear, first);
      emit_quadratic(row.quadratic, 1.0, first);
      emit_empty_lhs(first);
      out_ += sense_token(row.sense);
      out_ += format_number(row.rhs);
      out_ += '\n';
    }
  }

  // Columns that appear in no objective term or row, and so would not be
  // declared before the Bounds section.
  std::vector<bool> unreferenced_columns() const {
    std::vector<bool> unreferenced(names_.size(), true);
    const auto mark_linear = [&](const DenseLinearPart& part) {
      for (DenseIndex column : part.columns) unreferenced[column] = false;
    };
    const auto mark_quadratic = [&](const std::vector<DenseQuadraticEntry>& entries) {
      for (const DenseQuadraticEntry& entry : entries) {
        unreferenced[entry.column_1] = false;
        unreferenced[entry.column_2] = false;
      }
    };
    mark_linear(backend_.objective().linear);
    mark_quadratic(backend_.objective().quadratic);
    for (const DenseLinearRow& row : backend_.linear_rows()) mark_linear(row.linear);
    for (const DenseQuadraticRow& row : backend_.quadratic_rows()) {
      mark_linear(row.linear);
      mark_quadratic(row.quadratic);
    }
    return unreferenced;
  }

  void emit_bounds() {
    out_ += "Bounds\n";
    const auto& columns = backend_.columns();
    const std::vector<bool> unreferenced = unreferenced_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const ColumnData& column = columns[i];
      const double lb = column.lower_bound;
      const double ub = column.upper_bound;
      const std::string& name = names_[i];
      const bool default_bounds =
          (column.domain == VariableDomain::Binary && lb == 0.0 && ub == 1.0) ||
          (lb == 0.0 && ub == kInfinity);
      if (default_bounds && !unreferenced[i]) continue;
      out_ += ' ';
      if (lb == -kInfinity && ub == kInfinity) {
        out_ += name;
        out_ += " free";
      } else if (lb == ub) {
        out_ += name;
        out_ += " = ";
        out_ += format_number(lb);
      } else if (ub == kInfinity) {
        out_ += name;
        out_ += " >= ";
        out_ += format_number(lb);
      } else {
        out_ += format_number(lb);
        out_ += " <= ";
        out_ += name;
        out_ += " <= ";
        out_ += format_number(ub);
      }
      out_ += '\n';
    }
  }

  void emit_domain_section(std::string_view header, VariableDomain domain) {
    const auto& columns = backend_.columns();
    bool any = false;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].domain != domain) continue;
      if (!any) {
        out_ += header;
        out_ += '\n';
        any = true;
      }
      out_ += ' ';
      out_ += names_[i];
      out_ += '\n';
    }
  }

  void emit_integrality() {
    emit_domain_section("General", VariableDomain::Integer);
    emit_domain_section("Binary", VariableDomain::Binary);
  }

  void emit_sos() {
    const auto& rows = backend_.sos_rows();
    if (rows.empty()) return;
    out_ += "SOS\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const DenseSosRow& row = rows[r];
      emit_row_label(row.name, 's', r);
      out_ += row.type == SosType::SOS1 ? "S1::" : "S2::";
      for (std::size_t k = 0; k < row.columns.size(); ++k) {
        out_ += ' ';
        out_ += names_[row.columns[k]];
        out_ += ':';
        out_ += format_number(row.weights[k]);
      }
      out_ += '\n';
    }
  }

  const ReferenceBackend& backend_;
  std::string& out_;
  std::vector<std::string> names_;
};

}  // namespace

void write_lp(const ReferenceBackend& backend, std::ostream& out) {
  std::string text;
  LpEmitter(backend, text).emit();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace modelcore
