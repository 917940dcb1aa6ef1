#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hankelcat/closed_form.hpp"
#include "hankelcat/determinant.hpp"
#include "hankelcat/hankel.hpp"
#include "hankelcat/matrix.hpp"
#include "hankelcat/sequences.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// hankelcat::Int <-> python int, exact in both directions via decimal
// strings. Rejects floats so nothing is ever silently truncated.
template <>
struct type_caster<hankelcat::Int> {
    PYBIND11_TYPE_CASTER(hankelcat::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        PyObject* repr = PyObject_Str(src.ptr());
        if (repr == nullptr) {
            return false;
        }
        const char* text = PyUnicode_AsUTF8(repr);
        if (text == nullptr) {
            Py_DECREF(repr);
            return false;
        }
        value = hankelcat::Int(std::string(text));
        Py_DECREF(repr);
        return true;
    }

    static handle cast(const hankelcat::Int& src, return_value_policy, handle) {
        const std::string decimal = src.str();
        return PyLong_FromString(decimal.c_str(), nullptr, 10);
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using hankelcat::ConsistencyRecord;
using hankelcat::ExactMatrix;
using hankelcat::Int;
using hankelcat::SequenceSource;

SequenceSource source_from(const std::optional<std::vector<Int>>& seq) {
    if (!seq) {
        return SequenceSource::builtin_catalan();
    }
    return SequenceSource::explicit_terms(*seq);
}

ExactMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
    std::vector<Int> entries;
    entries.reserve(n_rows * n_cols);
    for (const auto& row : rows) {
        if (row.size() != n_cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ExactMatrix(n_rows, n_cols, std::move(entries));
}

std::vector<std::vector<Int>> matrix_to_rows(const ExactMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rows[i].push_back(m(i, j));
        }
    }
    return rows;
}

hankelcat::DetMethod method_from(const std::string& name) {
    if (name == "laplace") return hankelcat::DetMethod::Laplace;
    if (name == "bareiss") return hankelcat::DetMethod::Bareiss;
    if (name == "auto") return hankelcat::DetMethod::Auto;
    throw std::invalid_argument("unknown determinant method: " + name);
}

}  // namespace

PYBIND11_MODULE(_hankelcat, m) {
    m.doc() = "Exact Hankel determinants and Hankel transforms of integer sequences";

    py::register_exception<hankelcat::SequenceTooShort>(m, "SequenceTooShortError",
                                                        PyExc_ValueError);
    py::register_exception<hankelcat::NotSquare>(m, "NotSquareError", PyExc_ValueError);
    py::register_exception<hankelcat::DimensionCapExceeded>(m, "DimensionCapError",
                                                            PyExc_ValueError);
    py::register_exception<hankelcat::ParseError>(m, "SequenceParseError", PyExc_ValueError);
    py::register_exception<hankelcat::EmptySequence>(m, "EmptySequenceError", PyExc_ValueError);

    m.def("catalan", &hankelcat::catalan, py::arg("k"), "k-th Catalan number");
    m.def("catalan_prefix", &hankelcat::catalan_prefix, py::arg("count"),
          "[C_0, ..., C_{count-1}]");
    m.def("binomial", &hankelcat::binomial, py::arg("top"), py::arg("bottom"),
          "binomial coefficient; 0 when bottom < 0 or bottom > top");

    py::class_<ExactMatrix>(m, "ExactMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_property_readonly("rows", &ExactMatrix::rows)
        .def_property_readonly("cols", &ExactMatrix::cols)
        .def("__getitem__",
             [](const ExactMatrix& self, std::pair<std::size_t, std::size_t> index) {
                 if (index.first >= self.rows() || index.second >= self.cols()) {
                     throw py::index_error("matrix index out of range");
                 }
                 return self(index.first, index.second);
             })
        .def("tolist", &matrix_to_rows)
        .def("transposed", &ExactMatrix::transposed)
        .def("__eq__", [](const ExactMatrix& a, const ExactMatrix& b) { return a == b; })
        .def("__repr__", [](const ExactMatrix& self) {
            std::ostringstream os;
            os << "ExactMatrix(" << self.rows() << "x" << self.cols() << ")";
            return os.str();
        });

    m.def(
        "hankel_matrix",
        [](std::size_t n, std::size_t r, const std::optional<std::vector<Int>>& seq) {
            return hankelcat::hankel_matrix({source_from(seq), n, r});
        },
        py::arg("n"), py::arg("r"), py::arg("seq") = py::none(),
        "n x n matrix (a_{i+j+r}); seq=None uses the Catalan sequence");
    m.def("cigler_matrix", &hankelcat::cigler_matrix, py::arg("n"), py::arg("r"),
          "r x r matrix (binom(i+j+n, i-j+n))");

    m.def(
        "det",
        [](const ExactMatrix& matrix, const std::string& method) {
            return hankelcat::det(matrix, method_from(method));
        },
        py::arg("matrix"), py::arg("method") = "auto",
        "exact determinant; method is auto, laplace or bareiss");
    m.def("det_laplace", &hankelcat::det_laplace, py::arg("matrix"),
          "cofactor-expansion determinant (oracle, capped at 8x8)");
    m.def("det_bareiss", &hankelcat::det_bareiss, py::arg("matrix"),
          "fraction-free elimination determinant");

    m.def(
        "hankel_det",
        [](std::size_t n, std::size_t r, const std::optional<std::vector<Int>>& seq) {
            return hankelcat::det_bareiss(hankelcat::hankel_matrix({source_from(seq), n, r}));
        },
        py::arg("n"), py::arg("r"), py::arg("seq") = py::none(),
        "det of the n x n Hankel matrix with shift r");
    m.def(
        "hankel_transform",
        [](std::size_t r, std::size_t max_n, const std::optional<std::vector<Int>>& seq) {
            return hankelcat::hankel_transform(source_from(seq), r, max_n);
        },
        py::arg("r"), py::arg("max_n"), py::arg("seq") = py::none(),
        "[det H(n, r)] for n = 0 ... max_n");

    m.def("eval_shift4", &hankelcat::eval_shift4, py::arg("n"));
    m.def("eval_shift5", &hankelcat::eval_shift5, py::arg("n"));
    m.def("eval_shift6", &hankelcat::eval_shift6, py::arg("n"));
    m.def("eval_shift7", &hankelcat::eval_shift7, py::arg("n"));
    m.def("eval_general", &hankelcat::eval_general, py::arg("n"), py::arg("r"),
          "closed-form value of the n x n Catalan Hankel determinant with shift r");

    py::class_<ConsistencyRecord>(m, "ConsistencyRecord")
        .def_readonly("n", &ConsistencyRecord::order_n)
        .def_readonly("r", &ConsistencyRecord::shift_r)
        .def_readonly("direct", &ConsistencyRecord::direct_value)
        .def_readonly("cigler", &ConsistencyRecord::cigler_value)
        .def_readonly("closed_form", &ConsistencyRecord::closed_form_value)
        .def_readonly("agree", &ConsistencyRecord::agree)
        .def("__repr__", [](const ConsistencyRecord& rec) {
            std::ostringstream os;
            os << "ConsistencyRecord(n=" << rec.order_n << ", r=" << rec.shift_r
               << ", direct=" << rec.direct_value << ", cigler=" << rec.cigler_value
               << ", closed_form=" << rec.closed_form_value << ", agree="
               << (rec.agree ? "True" : "False") << ")";
            return os.str();
        });

    m.def(
        "check_point",
        [](std::size_t n, std::size_t r) { return hankelcat::check_point(n, r); },
        py::arg("n"), py::arg("r"),
        "one grid point computed by elimination, Cigler reduction and closed form");
    m.def(
        "sweep",
        [](std::size_t max_n, std::size_t max_r) { return hankelcat::sweep(max_n, max_r); },
        py::arg("max_n"), py::arg("max_r"),
        "all consistency records for the (n, r) grid, ordered by (r, n)");
    m.def("polynomial_identity_check", &hankelcat::polynomial_identity_check, py::arg("r"),
          "prove shift-r formula == general formula by 41-point evaluation (r in 4..7)");

#ifdef HANKELCAT_VERSION
    m.attr("__version__") = HANKELCAT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
