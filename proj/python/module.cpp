#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "yf/boundary.hpp"
#include "yf/graph.hpp"
#include "yf/path_count.hpp"

namespace py = pybind11;
using namespace yf;

namespace {

py::object py_int(const BigInt& n) {
    const std::string s = n.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object py_fraction(const BigRat& q) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(rat_str(q));
}

py::tuple py_interval(const Interval& i) {
    return py::make_tuple(py_fraction(i.lo()), py_fraction(i.hi()));
}

BigRat rat_arg(const py::object& obj) {
    return parse_rat(py::cast<std::string>(py::str(obj)));
}

Word word_arg(const std::string& s) {
    return Word::parse(s);
}

InfiniteWordSpec spec_arg(const std::string& s) {
    return InfiniteWordSpec::parse(s);
}

const char* positivity_str(Positivity p) {
    switch (p) {
    case Positivity::yes:
        return "yes";
    case Positivity::no:
        return "no";
    default:
        return "unknown";
    }
}

py::dict report_dict(const LevelReport& rep) {
    py::dict d;
    d["n"] = rep.n;
    d["delta"] = py_fraction(rep.delta);
    d["l"] = rep.l;
    if (rep.epsilon)
        d["epsilon"] = py_fraction(*rep.epsilon);
    py::list rows;
    for (const LevelRow& r : rep.rows) {
        py::dict row;
        row["word"] = r.word.str();
        row["mu"] = py_interval(r.mu);
        row["h_prime"] = r.h_prime;
        row["pi"] = py_fraction(r.pi_v);
        row["in_p"] = r.in_p;
        row["in_q"] = r.in_q;
        if (r.in_r)
            row["in_r"] = *r.in_r;
        rows.append(row);
    }
    d["rows"] = rows;
    d["total_mass"] = py_interval(rep.total_mass);
    d["p_mass"] = py_interval(rep.p_mass);
    d["pbar_mass"] = py_interval(rep.pbar_mass);
    d["q_mass"] = py_interval(rep.q_mass);
    d["qbar_mass"] = py_interval(rep.qbar_mass);
    if (rep.r_mass) {
        d["r_mass"] = py_interval(*rep.r_mass);
        d["rbar_mass"] = py_interval(*rep.rbar_mass);
    }
    d["bound"] = py_interval(rep.bound_value);
    return d;
}

} // namespace

PYBIND11_MODULE(yflattice, m) {
    m.doc() = "Exact computations on the Young-Fibonacci graded graph: path counts, "
              "boundary measures and concentration experiments.";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<tolerance_error>(m, "ToleranceError", PyExc_RuntimeError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    m.def("rank", [](const std::string& x) { return word_arg(x).rank(); });
    m.def("length", [](const std::string& x) { return word_arg(x).length(); });
    m.def("one_count", [](const std::string& x) { return word_arg(x).one_count(); });
    m.def("two_count", [](const std::string& x) { return word_arg(x).two_count(); });
    m.def("concat",
          [](const std::string& x, const std::string& y) { return concat(word_arg(x), word_arg(y)).str(); });
    m.def("up_neighbors", [](const std::string& x) {
        std::vector<std::string> out;
        for (const Word& w : up_neighbors(word_arg(x)))
            out.push_back(w.str());
        return out;
    });
    m.def("down_neighbors", [](const std::string& x) {
        std::vector<std::string> out;
        for (const Word& w : down_neighbors(word_arg(x)))
            out.push_back(w.str());
        return out;
    });
    m.def("enumerate_level", [](std::size_t n) {
        std::vector<std::string> out;
        for (const Word& w : enumerate_level(n))
            out.push_back(w.str());
        return out;
    });
    m.def("fibonacci", [](std::size_t n) { return py_int(fibonacci(n)); });
    m.def("common_suffix_len",
          [](const std::string& x, const std::string& y) { return common_suffix_len(word_arg(x), word_arg(y)); });
    m.def("common_suffix_rank",
          [](const std::string& x, const std::string& y) { return common_suffix_rank(word_arg(x), word_arg(y)); });
    m.def("g", [](const std::string& x, std::size_t k) { return g(word_arg(x), k); });
    m.def("g_prime", [](const std::string& x, std::size_t k) { return g_prime(word_arg(x), k); });

    m.def("d_bruteforce",
          [](const std::string& x, const std::string& y) { return py_int(d_bruteforce(word_arg(x), word_arg(y))); });
    m.def("d_closed",
          [](const std::string& x, const std::string& y) { return py_int(d_closed(word_arg(x), word_arg(y))); });
    m.def("d_to_empty", [](const std::string& y) { return py_int(d_to_empty(word_arg(y))); });
    m.def("f_eval",
          [](const std::string& x, std::size_t y, std::size_t z) { return py_fraction(f_eval(word_arg(x), y, z)); });
    m.def("d_from_twos",
          [](const std::string& a, std::size_t k) { return py_int(d_from_twos(word_arg(a), k)); });
    m.def("d_from_twos_fixed", [](const std::string& a, std::size_t k, const std::vector<std::size_t>& deleted) {
        return py_int(d_from_twos_fixed(word_arg(a), k, deleted));
    });
    m.def("factorize_check", [](const std::string& prefix, const std::string& suffix) {
        const auto fc = factorize_check(word_arg(prefix), word_arg(suffix));
        return py::make_tuple(py_int(fc.whole), py_int(fc.suffix_part), py_int(fc.prefix_part));
    });
    m.def("enumerate_paths", [](const std::string& x, const std::string& y, std::uint64_t cap) {
        py::list out;
        for (const auto& path : enumerate_paths(word_arg(x), word_arg(y), cap)) {
            py::list p;
            for (const Word& w : path)
                p.append(w.str());
            out.append(p);
        }
        return out;
    }, py::arg("x"), py::arg("y"), py::arg("cap") = 10000);

    m.def("pi_finite", [](const std::string& x) { return py_fraction(pi_finite(word_arg(x))); });
    m.def("pi_infinite", [](const std::string& w, const py::object& tol) {
        return py_interval(pi_infinite(spec_arg(w), rat_arg(tol)));
    });
    m.def("is_positive_boundary",
          [](const std::string& w) { return positivity_str(is_positive_boundary(spec_arg(w))); });
    m.def("suffix_word", [](const std::string& w, std::size_t m) { return spec_arg(w).suffix_word(m).str(); });
    m.def("mu_finite", [](const std::string& w, const std::string& v, std::size_t m) {
        return py_fraction(mu_finite(spec_arg(w), word_arg(v), m));
    });
    m.def("mu_limit", [](const std::string& w, const std::string& v, const py::object& tol) {
        return py_interval(mu_limit(spec_arg(w), word_arg(v), rat_arg(tol)));
    });
    m.def("level_masses", [](const std::string& w, std::size_t n, std::size_t m) {
        return py_fraction(level_masses(spec_arg(w), n, m));
    });
    m.def("classify_level",
          [](const std::string& w, std::size_t n, const py::object& delta, std::size_t l,
             const py::object& epsilon, const py::object& tol) {
              std::optional<BigRat> eps;
              if (!epsilon.is_none())
                  eps = rat_arg(epsilon);
              return report_dict(classify_level(spec_arg(w), n, rat_arg(delta), l, eps, rat_arg(tol)));
          },
          py::arg("w"), py::arg("n"), py::arg("delta") = "1/2", py::arg("l") = 1,
          py::arg("epsilon") = py::none(), py::arg("tol") = "1/1000000000000");
    m.def("classify_level_finite",
          [](const std::string& w, std::size_t n, std::size_t m_stage, const py::object& delta,
             std::size_t l, const py::object& epsilon) {
              std::optional<BigRat> eps;
              if (!epsilon.is_none())
                  eps = rat_arg(epsilon);
              return report_dict(classify_level_finite(spec_arg(w), n, m_stage, rat_arg(delta), l, eps));
          },
          py::arg("w"), py::arg("n"), py::arg("m"), py::arg("delta") = "1/2", py::arg("l") = 1,
          py::arg("epsilon") = py::none());
    m.def("concentration_series",
          [](const std::string& w, const py::object& delta, std::size_t n_from, std::size_t n_to,
             const py::object& tol) {
              const auto series = concentration_series(spec_arg(w), rat_arg(delta), n_from, n_to, rat_arg(tol));
              py::list out;
              for (const auto& p : series.points) {
                  py::dict d;
                  d["n"] = p.n;
                  d["pbar_mass"] = py_interval(p.pbar_mass);
                  d["bound"] = py_interval(p.bound);
                  out.append(d);
              }
              return py::make_tuple(out, series.truncated);
          },
          py::arg("w"), py::arg("delta"), py::arg("n_from"), py::arg("n_to"),
          py::arg("tol") = "1/1000000000000");
    m.def("concentration_series_approx",
          [](const std::string& w, const py::object& delta, std::size_t n_from, std::size_t n_to) {
              py::list out;
              for (const auto& p : concentration_series_approx(spec_arg(w), rat_arg(delta), n_from, n_to)) {
                  py::dict d;
                  d["n"] = p.n;
                  d["pbar_mass"] = p.pbar_mass;
                  d["bound"] = p.bound;
                  out.append(d);
              }
              return out;
          });
    m.def("pi_ratio_bounds_check",
          [](const std::string& w, const py::object& delta, std::size_t n, const std::string& v,
             const py::object& tol) {
              const auto r = pi_ratio_bounds_check(spec_arg(w), rat_arg(delta), n, word_arg(v), rat_arg(tol));
              py::dict d;
              d["lower"] = py_fraction(r.lower);
              d["ratio"] = py_interval(r.ratio);
              return d;
          },
          py::arg("w"), py::arg("delta"), py::arg("n"), py::arg("v"), py::arg("tol") = "1/1000000000000");
    m.def("ass_inequality_check",
          [](const std::string& w, std::size_t n, const py::object& delta, std::size_t m) {
              const auto r = ass_inequality_check(spec_arg(w), n, rat_arg(delta), m);
              return py::make_tuple(py_fraction(r.lhs), py_fraction(r.rhs));
          });
}
