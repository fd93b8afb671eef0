#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signpart/classify.hpp"
#include "signpart/counting.hpp"
#include "signpart/mn.hpp"
#include "signpart/odd_degree.hpp"
#include "signpart/partition.hpp"
#include "signpart/theta.hpp"

namespace py = pybind11;
using namespace signpart;

namespace {

// Partitions cross the boundary as canonical strings ("4,1^2") or as
// sequences of ints; values come back as arbitrary-size python ints.

Partition to_partition(const py::object& obj) {
    if (py::isinstance<py::str>(obj))
        return Partition::parse(obj.cast<std::string>());
    return Partition(obj.cast<std::vector<int>>());
}

py::object to_pyint(const CharValue& v) {
    const std::string digits = v.str();
    PyObject* raw = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!raw) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(raw);
}

py::list to_pylist(const std::vector<Partition>& list) {
    py::list out;
    for (const Partition& p : list) out.append(p.str());
    return out;
}

py::dict report_dict(const ClassificationReport& report) {
    py::dict d;
    d["mu"] = report.mu.str();
    d["n"] = report.n;
    d["is_sign"] = report.is_sign;
    d["is_up"] = report.is_up;
    d["is_sd"] = report.is_sd;
    if (report.support_size) d["support_size"] = *report.support_size;
    if (report.witness) {
        py::dict w;
        w["lambda"] = report.witness->lambda.str();
        w["value"] = to_pyint(report.witness->value);
        d["witness"] = w;
    }
    if (report.up_witness) d["up_witness"] = report.up_witness->str();
    return d;
}

PartitionKind to_kind(const std::string& name) {
    if (name == "sign") return PartitionKind::Sign;
    if (name == "up") return PartitionKind::Up;
    if (name == "sd") return PartitionKind::Sd;
    throw std::invalid_argument("unknown kind '" + name + "' (expected sign, up or sd)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact S_n character values via hook removal, and the sign/up/sd "
              "classification of conjugacy classes.";

    m.def("parse", [](const std::string& text) {
        return Partition::parse(text).parts();
    }, py::arg("text"), "Expand a partition string like '4,1^2' to its parts.");

    m.def("render", [](const py::object& mu) { return to_partition(mu).str(); },
          py::arg("mu"), "Canonical exponent-compressed string for a partition.");

    m.def("enumerate_partitions", [](int n) {
        py::list out;
        for_each_partition(n, [&](const Partition& p) { out.append(p.parts()); });
        return out;
    }, py::arg("n"), "Partitions of n in reverse-lexicographic order.");

    m.def("char_value", [](const py::object& lambda, const py::object& mu) {
        return to_pyint(char_value(to_partition(lambda), to_partition(mu)));
    }, py::arg("lambda_"), py::arg("mu"),
       "Irreducible character value [lambda](mu), exact.");

    m.def("degree", [](const py::object& lambda) {
        return to_pyint(degree(to_partition(lambda)));
    }, py::arg("lambda_"));

    m.def("degree_is_odd", [](const py::object& lambda) {
        return degree_is_odd(to_partition(lambda));
    }, py::arg("lambda_"));

    m.def("centralizer_order", [](const py::object& mu) {
        return to_pyint(centralizer_order(to_partition(mu)));
    }, py::arg("mu"));

    m.def("hook_lengths", [](const py::object& p) {
        return hook_lengths(to_partition(p));
    }, py::arg("p"), "Hook lengths of all cells, row-major.");

    m.def("remove_hooks", [](const py::object& p, int a) {
        py::list out;
        for (const HookRemoval& h : remove_hooks(to_partition(p), a)) {
            py::dict d;
            d["result"] = h.result.parts();
            d["leg_length"] = h.leg_length;
            d["hook_length"] = h.hook_length;
            out.append(d);
        }
        return out;
    }, py::arg("p"), py::arg("a"), "All single a-hook removals from p.");

    m.def("is_sd", [](const py::object& mu) { return is_sd(to_partition(mu)); },
          py::arg("mu"));

    m.def("is_up", [](const py::object& mu) {
        return is_up(to_partition(mu)).is_up;
    }, py::arg("mu"));

    m.def("count_paths", [](const py::object& lambda, const py::object& mu,
                            std::uint64_t cap) {
        return count_paths(to_partition(lambda), to_partition(mu), cap);
    }, py::arg("lambda_"), py::arg("mu"), py::arg("cap") = 1ull << 62);

    m.def("classify", [](const py::object& mu, unsigned workers) {
        return report_dict(classify(to_partition(mu), workers));
    }, py::arg("mu"), py::arg("workers") = 1,
       "Full sign/up/sd report with witnesses.");

    m.def("enumerate_class", [](int n, const std::string& kind, unsigned workers) {
        return to_pylist(enumerate_class(n, to_kind(kind), workers));
    }, py::arg("n"), py::arg("kind"), py::arg("workers") = 1);

    m.def("is_exceptional", [](const py::object& mu) {
        return is_exceptional(to_partition(mu));
    }, py::arg("mu"));

    m.def("conjecture_predicate", [](const py::object& mu) {
        return conjecture_predicate(to_partition(mu));
    }, py::arg("mu"));

    m.def("verify_conjecture", [](int n, unsigned workers) {
        py::list out;
        for (const ConjectureDiscrepancy& d : verify_conjecture(n, workers)) {
            py::dict e;
            e["mu"] = d.mu.str();
            e["predicted"] = d.predicted;
            e["brute_force"] = d.brute_force;
            out.append(e);
        }
        return out;
    }, py::arg("n"), py::arg("workers") = 1,
       "Discrepancies between the predicate and brute force; empty = agreement.");

    m.def("theta_decompose", [](const py::object& mu) {
        const ThetaDecomposition theta = theta_decompose(to_partition(mu));
        py::dict d;
        d["mu"] = theta.mu.str();
        d["plus"] = to_pylist(theta.plus);
        d["minus"] = to_pylist(theta.minus);
        d["degree_plus"] = to_pyint(theta.degree_plus);
        d["degree_minus"] = to_pyint(theta.degree_minus);
        return d;
    }, py::arg("mu"));

    m.def("evaluate_theta", [](const py::object& mu, const py::object& nu) {
        return to_pyint(evaluate_theta(to_partition(mu), to_partition(nu)));
    }, py::arg("mu"), py::arg("nu"));

    m.def("verify_theorem5", [](int n) {
        const OddDegreeReport r = verify_theorem5(n);
        py::dict d;
        d["n"] = r.n;
        d["exponents"] = r.exponents;
        d["mu"] = r.mu.str();
        d["mu_is_sd"] = r.mu_is_sd;
        d["sylow_ab_order"] = r.sylow_ab_order;
        d["odd_count"] = r.odd_count;
        d["support_matches"] = r.support_matches;
        d["theta_ok"] = r.theta_ok;
        d["ok"] = r.ok();
        return d;
    }, py::arg("n"));

    m.def("two_element_sign_classes", [](int n) {
        return to_pylist(two_element_sign_classes(n));
    }, py::arg("n"));

    m.def("counts", [](int max_n) {
        const CountTable t = count_table(max_n);
        py::dict d;
        py::list s, b, nsq;
        for (int n = 0; n <= max_n; ++n) {
            s.append(to_pyint(t.s[static_cast<std::size_t>(n)]));
            b.append(to_pyint(t.b[static_cast<std::size_t>(n)]));
            nsq.append(to_pyint(t.nsq[static_cast<std::size_t>(n)]));
        }
        d["s"] = s;
        d["b"] = b;
        d["nsq"] = nsq;
        return d;
    }, py::arg("max_n"), "sd, binary and non-squashing count columns 0..max_n.");

    m.def("verify_count_identities", &verify_count_identities, py::arg("max_k"));

#ifdef SIGNPART_VERSION
    m.attr("__version__") = SIGNPART_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
