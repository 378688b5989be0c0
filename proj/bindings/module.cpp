// Python bindings for the core operations: dataset handling, the three
// oversamplers, tree and boosted training, metrics, and profiling.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wotboost/analysis.hpp"
#include "wotboost/boosting.hpp"
#include "wotboost/csv.hpp"
#include "wotboost/dataset.hpp"
#include "wotboost/error.hpp"
#include "wotboost/matrix.hpp"
#include "wotboost/metrics.hpp"
#include "wotboost/rng.hpp"
#include "wotboost/samplers.hpp"
#include "wotboost/tree.hpp"

namespace py = pybind11;
using namespace wotboost;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const DoubleArray& arr) {
  if (arr.ndim() != 2) throw py::value_error("expected a 2-d float array");
  Matrix m(static_cast<std::size_t>(arr.shape(0)),
           static_cast<std::size_t>(arr.shape(1)));
  const double* data = arr.data();
  std::copy(data, data + m.rows * m.cols, m.values.begin());
  return m;
}

py::array_t<double> to_numpy(const Matrix& m) {
  py::array_t<double> arr({m.rows, m.cols});
  std::copy(m.values.begin(), m.values.end(), arr.mutable_data());
  return arr;
}

std::vector<ClassLabel> to_labels(const IntArray& arr) {
  if (arr.ndim() != 1) throw py::value_error("expected a 1-d label array");
  std::vector<ClassLabel> labels(static_cast<std::size_t>(arr.shape(0)));
  const std::int64_t* data = arr.data();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (data[i] == 0)
      labels[i] = ClassLabel::Majority;
    else if (data[i] == 1)
      labels[i] = ClassLabel::Minority;
    else
      throw py::value_error("labels must be 0 (majority) or 1 (minority)");
  }
  return labels;
}

std::vector<double> to_weights(const DoubleArray& arr) {
  if (arr.ndim() != 1) throw py::value_error("expected a 1-d weight array");
  const double* data = arr.data();
  return {data, data + arr.shape(0)};
}

Dataset dataset_from_numpy(const DoubleArray& features, const IntArray& labels,
                           std::vector<std::string> feature_names) {
  return make_dataset(to_matrix(features), to_labels(labels),
                      std::move(feature_names));
}

py::object opt_to_py(const std::optional<double>& v) {
  if (!v) return py::none();
  return py::float_(*v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Weighted minority oversampling, boosting, and imbalance metrics.";

  py::register_exception<Error>(m, "WotboostError", PyExc_RuntimeError);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init(&dataset_from_numpy), py::arg("features"),
           py::arg("labels"), py::arg("feature_names") = std::vector<std::string>{},
           "Build a dataset from a (rows, features) float array and a 0/1 "
           "label array where 1 marks the minority class.")
      .def("__len__", &Dataset::size)
      .def_property_readonly("n_features", &Dataset::n_features)
      .def_property_readonly("feature_names",
                             [](const Dataset& ds) { return ds.feature_names; })
      .def_property_readonly(
          "features", [](const Dataset& ds) { return to_numpy(ds.features); })
      .def_property_readonly("labels",
                             [](const Dataset& ds) {
                               py::array_t<std::int64_t> out(ds.size());
                               std::int64_t* data = out.mutable_data();
                               for (std::size_t i = 0; i < ds.size(); ++i)
                                 data[i] = ds.labels[i] == ClassLabel::Minority
                                               ? 1
                                               : 0;
                               return out;
                             })
      .def_property_readonly("counts",
                             [](const Dataset& ds) {
                               const ClassCounts c = class_counts(ds);
                               return py::make_tuple(c.majority, c.minority);
                             })
      .def_property_readonly(
          "imbalance_ratio",
          [](const Dataset& ds) { return imbalance_ratio(ds); })
      .def("__repr__", [](const Dataset& ds) {
        const ClassCounts c = class_counts(ds);
        return py::str("Dataset({} samples, {} features, {}/{} split)")
            .format(ds.size(), ds.n_features(), c.majority, c.minority);
      });

  m.def(
      "load_csv",
      [](const std::string& path, const std::string& minority,
         const std::string& label, const std::string& delimiter) {
        if (delimiter.size() != 1)
          throw py::value_error("delimiter must be a single character");
        CsvSchema schema;
        schema.label_column = label;
        schema.minority_value = minority;
        schema.delimiter = delimiter[0];
        return load_csv(path, schema);
      },
      py::arg("path"), py::arg("minority"), py::arg("label") = "",
      py::arg("delimiter") = ",",
      "Load a header-carrying CSV. `minority` is the label value of the "
      "minority class; an empty `label` means the last column.");

  m.def(
      "stratified_split",
      [](const Dataset& ds, double train_fraction, std::uint64_t seed) {
        SplitSpec spec;
        spec.train_fraction = train_fraction;
        spec.seed = seed;
        auto [train, test] = stratified_split(ds, spec);
        return py::make_tuple(std::move(train), std::move(test));
      },
      py::arg("ds"), py::arg("train_fraction") = 0.5, py::arg("seed") = 0);

  m.def(
      "smote",
      [](const DoubleArray& minority, std::size_t n, std::size_t k,
         std::uint64_t seed) {
        Rng rng(seed);
        return to_numpy(smote(to_matrix(minority), n, k, rng).samples);
      },
      py::arg("minority"), py::arg("n"), py::arg("k") = 5, py::arg("seed") = 0,
      "Synthesize `n` minority samples by uniform neighbor interpolation "
      "over a minority-only pool.");

  m.def(
      "adasyn",
      [](const Dataset& ds, std::size_t k, double beta, std::uint64_t seed) {
        Rng rng(seed);
        return to_numpy(adasyn(ds, k, beta, rng).samples);
      },
      py::arg("ds"), py::arg("k") = 5, py::arg("beta") = 1.0,
      py::arg("seed") = 0,
      "Synthesize minority samples with difficulty-proportional quotas; "
      "returns beta * (majority - minority) rows.");

  m.def(
      "weighted_oversample",
      [](const Dataset& ds, const DoubleArray& weights, std::size_t n,
         std::size_t k, std::uint64_t seed) {
        Rng rng(seed);
        return weighted_oversample(ds, WeightDistribution(to_weights(weights)),
                                   n, k, rng);
      },
      py::arg("ds"), py::arg("weights"), py::arg("n"), py::arg("k") = 5,
      py::arg("seed") = 0,
      "Append `n` synthetic minority samples allocated by the per-sample "
      "weights.");

  py::class_<DecisionTree>(m, "DecisionTree")
      .def_property_readonly("depth", &DecisionTree::depth)
      .def_property_readonly(
          "n_nodes",
          [](const DecisionTree& tree) { return tree.nodes().size(); })
      .def("predict",
           [](const DecisionTree& tree, const DoubleArray& features) {
             const Matrix m = to_matrix(features);
             py::array_t<std::int64_t> out(m.rows);
             std::int64_t* data = out.mutable_data();
             for (std::size_t r = 0; r < m.rows; ++r)
               data[r] =
                   tree.predict_label(m.row(r)) == ClassLabel::Minority ? 1
                                                                        : 0;
             return out;
           })
      .def("minority_scores",
           [](const DecisionTree& tree, const DoubleArray& features) {
             const Matrix m = to_matrix(features);
             py::array_t<double> out(m.rows);
             double* data = out.mutable_data();
             for (std::size_t r = 0; r < m.rows; ++r)
               data[r] = tree.predict_scores(m.row(r)).minority;
             return out;
           })
      .def("__repr__", [](const DecisionTree& tree) {
        return py::str("DecisionTree(depth={}, nodes={})")
            .format(tree.depth(), tree.nodes().size());
      });

  m.def(
      "fit_tree",
      [](const Dataset& ds, const std::optional<DoubleArray>& weights,
         std::size_t max_depth, std::size_t min_samples_leaf,
         double leaf_smoothing) {
        TreeConfig config{max_depth, min_samples_leaf, leaf_smoothing};
        const std::vector<double> w =
            weights ? to_weights(*weights)
                    : std::vector<double>(ds.size(), 1.0);
        return fit_tree(ds, w, config);
      },
      py::arg("ds"), py::arg("weights") = py::none(), py::arg("max_depth") = 8,
      py::arg("min_samples_leaf") = 1, py::arg("leaf_smoothing") = 1.0,
      "Fit a weighted-Gini tree; omitted weights mean uniform.");

  py::class_<BoostedEnsemble>(m, "BoostedEnsemble")
      .def_property_readonly(
          "n_members",
          [](const BoostedEnsemble& e) { return e.members.size(); })
      .def_property_readonly("betas",
                             [](const BoostedEnsemble& e) {
                               std::vector<double> betas;
                               betas.reserve(e.members.size());
                               for (const EnsembleMember& member : e.members)
                                 betas.push_back(member.beta);
                               return betas;
                             })
      .def("predict",
           [](const BoostedEnsemble& e, const DoubleArray& features) {
             const Matrix m = to_matrix(features);
             py::array_t<std::int64_t> out(m.rows);
             std::int64_t* data = out.mutable_data();
             for (std::size_t r = 0; r < m.rows; ++r)
               data[r] = predict_ensemble(e, m.row(r)).label ==
                                 ClassLabel::Minority
                             ? 1
                             : 0;
             return out;
           })
      .def("minority_scores",
           [](const BoostedEnsemble& e, const DoubleArray& features) {
             const Matrix m = to_matrix(features);
             py::array_t<double> out(m.rows);
             double* data = out.mutable_data();
             for (std::size_t r = 0; r < m.rows; ++r)
               data[r] = predict_ensemble(e, m.row(r)).minority_score;
             return out;
           })
      .def("__repr__", [](const BoostedEnsemble& e) {
        return py::str("BoostedEnsemble({} of {} rounds kept)")
            .format(e.members.size(), e.rounds_requested);
      });

  m.def(
      "train_boosted",
      [](const Dataset& train, std::size_t rounds, std::size_t k,
         const std::string& strategy, std::optional<std::size_t> synth_per_round,
         std::size_t max_depth, std::size_t min_samples_leaf,
         double leaf_smoothing, std::uint64_t seed) {
        BoostConfig config;
        config.rounds = rounds;
        config.k = k;
        config.synth_per_round = synth_per_round;
        config.tree = TreeConfig{max_depth, min_samples_leaf, leaf_smoothing};
        SynthesisStrategy kind;
        if (strategy == "weighted")
          kind = SynthesisStrategy::Weighted;
        else if (strategy == "smote")
          kind = SynthesisStrategy::UniformSmote;
        else if (strategy == "none")
          kind = SynthesisStrategy::None;
        else
          throw py::value_error(
              "strategy must be 'weighted', 'smote' or 'none'");
        Rng rng(seed);
        return train_boosted(train, config, kind, rng);
      },
      py::arg("train"), py::arg("rounds") = 10, py::arg("k") = 5,
      py::arg("strategy") = "weighted", py::arg("synth_per_round") = py::none(),
      py::arg("max_depth") = 8, py::arg("min_samples_leaf") = 1,
      py::arg("leaf_smoothing") = 1.0, py::arg("seed") = 0,
      "Boost trees over per-round oversampled training sets. The default "
      "quota balances the classes each round.");

  m.def(
      "evaluate",
      [](const IntArray& truth, const IntArray& predicted) {
        const std::vector<ClassLabel> t = to_labels(truth);
        const std::vector<ClassLabel> p = to_labels(predicted);
        const ConfusionMatrix cm = confusion(t, p);
        const MetricReport r = compute_metrics(cm);
        py::dict out;
        out["tp"] = cm.tp;
        out["fp"] = cm.fp;
        out["fn"] = cm.fn;
        out["tn"] = cm.tn;
        out["overall_accuracy"] = opt_to_py(r.overall_accuracy);
        out["precision"] = opt_to_py(r.precision);
        out["recall"] = opt_to_py(r.recall);
        out["f1"] = opt_to_py(r.f1);
        out["specificity"] = opt_to_py(r.specificity);
        out["g_mean"] = opt_to_py(r.g_mean);
        return out;
      },
      py::arg("truth"), py::arg("predicted"),
      "Confusion counts and threshold metrics; a metric whose defining "
      "ratio is 0/0 comes back as None.");

  m.def(
      "roc_auc",
      [](const IntArray& truth, const DoubleArray& scores) {
        if (scores.ndim() != 1)
          throw py::value_error("expected a 1-d score array");
        const std::vector<ClassLabel> t = to_labels(truth);
        const double* data = scores.data();
        const std::vector<double> s(data, data + scores.shape(0));
        return roc_auc(t, s);
      },
      py::arg("truth"), py::arg("scores"));

  m.def(
      "profile",
      [](const Dataset& ds, std::size_t k, bool normalize) {
        const DifficultyProfile p = profile(ds, ProfileOptions{k, normalize});
        py::dict out;
        out["samples"] = p.samples;
        out["features"] = p.features;
        out["majority"] = p.counts.majority;
        out["minority"] = p.counts.minority;
        out["imbalance_ratio"] = p.imbalance_ratio;
        out["n_safe"] = p.n_safe;
        out["n_unsafe"] = p.n_unsafe;
        out["unsafe_pct"] = p.unsafe_pct;
        return out;
      },
      py::arg("ds"), py::arg("k") = 5, py::arg("normalize") = false,
      "Class counts plus the safe/unsafe minority split: a minority sample "
      "is unsafe when more than one of its k nearest neighbors is majority.");
}
