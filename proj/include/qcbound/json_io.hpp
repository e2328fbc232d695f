#ifndef QCBOUND_JSON_IO_HPP
#define QCBOUND_JSON_IO_HPP

// JSON forms of matrices, states, channels, reports and SDP problems.
// Matrices are {"rows", "cols", "re", "im"} with re/im as arrays of rows.

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qcbound/channels.hpp"
#include "qcbound/report.hpp"
#include "qcbound/sdp.hpp"

namespace qcbound {

using Json = nlohmann::json;

/// Malformed or ill-typed JSON input. line/column are 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

inline Json parse_json(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset -> line/column.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": malformed JSON (" + e.what() + ")",
                     line, col);
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) { throw ParseError(what, 0, 0); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

inline Dims dims_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) schema_error(std::string("field \"") + key + "\" must be an array");
  Dims d;
  for (const Json& x : v) {
    if (!x.is_number_integer() || x.get<int>() < 1) {
      schema_error(std::string("field \"") + key + "\" must hold positive integers");
    }
    d.push_back(x.get<int>());
  }
  return d;
}

inline double number(const Json& v) {
  if (!v.is_number()) schema_error("matrix entries must be numbers");
  return v.get<double>();
}

}  // namespace detail

inline Json to_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json rr = Json::array(), ir = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

inline Json to_json(const RealMatrix& m) { return to_json(ComplexMatrix(m.cast<Complex>())); }

inline ComplexMatrix matrix_from_json(const Json& j) {
  const int rows = detail::int_field(j, "rows");
  const int cols = detail::int_field(j, "cols");
  if (rows < 0 || cols < 0) detail::schema_error("matrix: negative shape");
  const Json& re = detail::field(j, "re");
  const bool has_im = j.contains("im");
  auto check_rows = [&](const Json& a, const char* name) {
    if (!a.is_array() || static_cast<int>(a.size()) != rows) {
      detail::schema_error(std::string("matrix: \"") + name + "\" must have `rows` rows");
    }
    for (const Json& r : a) {
      if (!r.is_array() || static_cast<int>(r.size()) != cols) {
        detail::schema_error(std::string("matrix: each row of \"") + name + "\" needs `cols` entries");
      }
    }
  };
  check_rows(re, "re");
  if (has_im) check_rows(j.at("im"), "im");
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double x = detail::number(re[r][c]);
      const double y = has_im ? detail::number(j.at("im")[r][c]) : 0.0;
      m(r, c) = Complex(x, y);
    }
  }
  return m;
}

inline Json to_json(const DensityMatrix& rho) {
  return {{"dims", rho.dims()}, {"labels", rho.labels()}, {"matrix", to_json(rho.matrix())}};
}

inline DensityMatrix state_from_json(const Json& j) {
  const Dims dims = detail::dims_field(j, "dims");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) detail::schema_error("\"labels\" must be an array");
    for (const Json& l : j.at("labels")) {
      if (!l.is_string()) detail::schema_error("\"labels\" must hold strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return {matrix_from_json(detail::field(j, "matrix")), dims, labels};
}

inline Json to_json(const ChoiMatrix& c) {
  return {{"d_in", c.d_in()},         {"d_out", c.d_out()}, {"in_dims", c.in_dims()},
          {"out_dims", c.out_dims()}, {"labels", c.state().labels()},
          {"choi", to_json(c.matrix())}};
}

inline ChoiMatrix channel_from_json(const Json& j) {
  const int din = detail::int_field(j, "d_in");
  const int dout = detail::int_field(j, "d_out");
  const Dims in = j.contains("in_dims") ? detail::dims_field(j, "in_dims") : Dims{din};
  const Dims out = j.contains("out_dims") ? detail::dims_field(j, "out_dims") : Dims{dout};
  if (dim_product(in) != din || dim_product(out) != dout) {
    detail::schema_error("channel: in_dims/out_dims disagree with d_in/d_out");
  }
  Dims joined = in;
  joined.insert(joined.end(), out.begin(), out.end());
  return {DensityMatrix(matrix_from_json(detail::field(j, "choi")), joined), in, out};
}

inline Json to_json(const BoundReport& r) {
  Json diag = Json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = v;
  Json out{{"bound", r.bound_name},
           {"targets", r.targets},
           {"direction", to_string(r.direction)},
           {"method", to_string(r.method)},
           {"finite", r.value_bits.is_finite()},
           {"diagnostics", diag}};
  out["bits"] = r.value_bits.is_finite() ? Json(r.value_bits.value()) : Json("inf");
  out["relaxation"] = r.relaxation ? Json(*r.relaxation) : Json(nullptr);
  return out;
}

// SDP problems are dumped with dense block-diagonal data matrices.

inline Json to_json(const sdp::Problem& p) {
  int total = 0;
  std::vector<int> offset;
  for (int n : p.blocks) {
    offset.push_back(total);
    total += n;
  }
  auto dense = [&](const sdp::Functional& f) {
    RealMatrix m = RealMatrix::Zero(total, total);
    for (const sdp::Entry& e : f) {
      m(offset[e.block] + e.row, offset[e.block] + e.col) += 0.5 * e.weight;
      m(offset[e.block] + e.col, offset[e.block] + e.row) += 0.5 * e.weight;
    }
    return to_json(m);
  };
  Json a = Json::array(), b = Json::array();
  for (const auto& c : p.constraints) {
    a.push_back(dense(c.terms));
    b.push_back(c.rhs);
  }
  return {{"blocks", p.blocks},
          {"C", dense(p.objective)},
          {"A", a},
          {"b", b},
          {"sense", p.sense == sdp::Sense::Minimize ? "min" : "max"}};
}

inline sdp::Problem sdp_problem_from_json(const Json& j) {
  sdp::Problem p;
  const Dims blocks = detail::dims_field(j, "blocks");
  std::vector<int> offset;
  int total = 0;
  for (int n : blocks) {
    offset.push_back(total);
    p.add_block(n);
    total += n;
  }
  auto sparse = [&](const Json& mj) {
    const ComplexMatrix m = matrix_from_json(mj);
    if (m.rows() != total || m.cols() != total) detail::schema_error("sdp: data matrix shape");
    if (m.imag().cwiseAbs().maxCoeff() > 0.0) detail::schema_error("sdp: data must be real");
    const RealMatrix r = m.real();
    if ((r - r.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
      detail::schema_error("sdp: data matrix not symmetric");
    }
    sdp::Functional f;
    for (int row = 0; row < total; ++row) {
      for (int col = row; col < total; ++col) {
        if (r(row, col) == 0.0) continue;
        int blk = -1;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          const int lo = offset[b], hi = offset[b] + blocks[b];
          if (row >= lo && row < hi && col >= lo && col < hi) blk = static_cast<int>(b);
        }
        if (blk < 0) detail::schema_error("sdp: data matrix does not conform to the blocks");
        const double w = row == col ? r(row, col) : r(row, col) + r(col, row);
        f.push_back({blk, row - offset[blk], col - offset[blk], w});
      }
    }
    return f;
  };
  p.objective = sparse(detail::field(j, "C"));
  const Json& a = detail::field(j, "A");
  const Json& b = detail::field(j, "b");
  if (!a.is_array() || !b.is_array() || a.size() != b.size()) {
    detail::schema_error("sdp: \"A\" and \"b\" must be arrays of equal length");
  }
  for (std::size_t i = 0; i < a.size(); ++i) p.add_constraint(sparse(a[i]), detail::number(b[i]));
  const Json& sense = detail::field(j, "sense");
  if (sense == "min") {
    p.sense = sdp::Sense::Minimize;
  } else if (sense == "max") {
    p.sense = sdp::Sense::Maximize;
  } else {
    detail::schema_error("sdp: \"sense\" must be \"min\" or \"max\"");
  }
  return p;
}

}  // namespace qcbound

#endif  // QCBOUND_JSON_IO_HPP
