// Copyright 2026 The sentivec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "sentivec/classify.hpp"
#include "sentivec/error.hpp"
#include "sentivec/io.hpp"

namespace sentivec::classify {
namespace {

const std::string kModule = "classify";

constexpr double kTau = 1e-12;
// Gram matrices up to this many entries are computed once up front.
constexpr std::size_t kMaxCachedGram = std::size_t{1} << 23;

/// Kernel rows K(x_i, .), either from a precomputed Gram matrix or computed
/// on demand into one of two slots.
class KernelRows {
 public:
  KernelRows(const LabeledSet& data, double gamma) : data_(data), gamma_(gamma), n_(data.size()) {
    if (n_ * n_ <= kMaxCachedGram) {
      gram_.resize(n_ * n_);
      for (std::size_t i = 0; i < n_; ++i) {
        gram_[i * n_ + i] = 1.0;
        for (std::size_t j = i + 1; j < n_; ++j) {
          const double k = eval(i, j);
          gram_[i * n_ + j] = gram_[j * n_ + i] = k;
        }
      }
    } else {
      for (auto& s : slots_) s.values.resize(n_);
    }
  }

  const double* row(std::size_t i) {
    if (!gram_.empty()) return gram_.data() + i * n_;
    for (auto& s : slots_) {
      if (s.index == i) return s.values.data();
    }
    Slot& s = slots_[next_];
    next_ ^= 1;
    s.index = i;
    for (std::size_t j = 0; j < n_; ++j) s.values[j] = eval(i, j);
    return s.values.data();
  }

 private:
  struct Slot {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    std::vector<double> values;
  };

  double eval(std::size_t i, std::size_t j) const {
    return rbf(data_.items[i].feature.vector, data_.items[j].feature.vector, gamma_);
  }

  const LabeledSet& data_;
  double gamma_;
  std::size_t n_;
  std::vector<double> gram_;
  Slot slots_[2];
  int next_ = 0;
};

void check_config(const SvmConfig& cfg) {
  if (!(cfg.C > 0.0)) throw Error(kModule, "C must be > 0");
  if (!(cfg.gamma > 0.0)) throw Error(kModule, "gamma must be > 0");
  if (!(cfg.tol > 0.0)) throw Error(kModule, "tol must be > 0");
}

}  // namespace

SmoSolution solve_dual(const LabeledSet& train, const SvmConfig& cfg) {
  check_config(cfg);
  if (!train.has_both_classes()) {
    throw Error(kModule, "SVM training needs both classes (got a single-class set of " +
                             std::to_string(train.size()) + ")");
  }
  const std::size_t n = train.size();
  const std::size_t dim = train.items.front().feature.vector.size();
  for (const auto& e : train.items) {
    if (e.feature.vector.size() != dim)
      throw Error(kModule, "training features differ in dimension");
  }
  const double C = cfg.C;
  const std::size_t cap = cfg.max_updates ? cfg.max_updates : 10 * n * n;

  std::vector<double> y(n), alpha(n, 0.0), grad(n, -1.0);
  for (std::size_t i = 0; i < n; ++i) y[i] = train.items[i].label > 0 ? 1.0 : -1.0;
  KernelRows kernel(train, cfg.gamma);

  auto in_up = [&](std::size_t t) {
    return (y[t] > 0 && alpha[t] < C) || (y[t] < 0 && alpha[t] > 0);
  };
  auto in_low = [&](std::size_t t) {
    return (y[t] < 0 && alpha[t] < C) || (y[t] > 0 && alpha[t] > 0);
  };

  SmoSolution sol;
  for (;;) {
    // Maximal violating pair.
    double m = -std::numeric_limits<double>::infinity();
    double M = std::numeric_limits<double>::infinity();
    std::size_t i = n, j = n;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      if (in_up(t) && v > m) {
        m = v;
        i = t;
      }
      if (in_low(t) && v < M) {
        M = v;
        j = t;
      }
    }
    sol.final_gap = m - M;
    if (i == n || j == n || m - M < cfg.tol) break;
    if (sol.updates >= cap) {
      throw Error(kModule, "SMO did not converge within " + std::to_string(cap) + " updates (gap " +
                               io::format_shortest(m - M) + ")");
    }

    const double* ki = kernel.row(i);
    const double* kj = kernel.row(j);
    const double qij = y[i] * y[j] * ki[j];
    const double old_ai = alpha[i];
    const double old_aj = alpha[j];

    if (y[i] != y[j]) {
      double quad = ki[i] + kj[j] + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > 0) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = C - diff;
        }
      } else if (alpha[j] > C) {
        alpha[j] = C;
        alpha[i] = C + diff;
      }
    } else {
      double quad = ki[i] + kj[j] - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > C) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = sum - C;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > C) {
        if (alpha[j] > C) {
          alpha[j] = C;
          alpha[i] = sum - C;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }

    const double dai = alpha[i] - old_ai;
    const double daj = alpha[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t) {
      grad[t] += y[t] * (y[i] * ki[t] * dai + y[j] * kj[t] * daj);
    }
    ++sol.updates;
  }

  // Bias from the free multipliers, or the middle of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double free_sum = 0.0;
  std::size_t free_count = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (alpha[t] >= C) {
      if (y[t] < 0) {
        ub = std::min(ub, yg);
      } else {
        lb = std::max(lb, yg);
      }
    } else if (alpha[t] <= 0) {
      if (y[t] > 0) {
        ub = std::min(ub, yg);
      } else {
        lb = std::max(lb, yg);
      }
    } else {
      free_sum += yg;
      ++free_count;
    }
  }
  const double rho = free_count ? free_sum / static_cast<double>(free_count) : (ub + lb) / 2.0;
  sol.bias = -rho;
  sol.alpha = std::move(alpha);
  return sol;
}

SvmModel make_model(const LabeledSet& train, const SmoSolution& sol, const SvmConfig& cfg) {
  SvmModel model;
  model.gamma = cfg.gamma;
  model.C = cfg.C;
  model.bias = sol.bias;
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (sol.alpha[i] <= 0.0) continue;
    model.support_vectors.push_back(train.items[i].feature.vector);
    model.coef.push_back(train.items[i].label > 0 ? sol.alpha[i] : -sol.alpha[i]);
  }
  return model;
}

SvmModel train_svm(const LabeledSet& train, const SvmConfig& cfg) {
  return make_model(train, solve_dual(train, cfg), cfg);
}

double decision_value(const SvmModel& svm, std::span<const double> x) {
  if (!svm.support_vectors.empty() && x.size() != svm.dim()) {
    throw Error(kModule, "feature dimension " + std::to_string(x.size()) +
                             " does not match the model's " + std::to_string(svm.dim()));
  }
  double f = svm.bias;
  for (std::size_t i = 0; i < svm.support_vectors.size(); ++i) {
    f += svm.coef[i] * rbf(svm.support_vectors[i], x, svm.gamma);
  }
  return f;
}

int predict(const SvmModel& svm, const DocFeature& feature) {
  return decision_value(svm, feature.vector) >= 0.0 ? 1 : -1;
}

double evaluate(const SvmModel& svm, const LabeledSet& test) {
  if (test.items.empty()) throw Error(kModule, "cannot evaluate on an empty test set");
  std::size_t correct = 0;
  for (const auto& e : test.items) {
    if (predict(svm, e.feature) == (e.label > 0 ? 1 : -1)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

void save_svm(const SvmModel& svm, const std::string& path) {
  io::write_atomic(
      path,
      [&](std::ostream& os) {
        os << "sentivec-svm 1\n";
        os << "gamma " << io::format_shortest(svm.gamma) << '\n';
        os << "C " << io::format_shortest(svm.C) << '\n';
        os << "b " << io::format_shortest(svm.bias) << '\n';
        os << "sv " << svm.support_vectors.size() << ' ' << svm.dim() << '\n';
        for (std::size_t i = 0; i < svm.support_vectors.size(); ++i) {
          os << io::format_shortest(svm.coef[i]);
          for (const double v : svm.support_vectors[i]) os << ' ' << io::format_shortest(v);
          os << '\n';
        }
      },
      kModule);
}

SvmModel load_svm(const std::string& path) {
  const std::string text = io::read_file(path, kModule);
  const auto ls = io::lines(text);
  auto fail = [&](std::size_t line, const std::string& what) -> Error {
    return Error(kModule, path + ": line " + std::to_string(line) + ": " + what);
  };
  if (ls.size() < 5 || ls[0] != "sentivec-svm 1") throw fail(1, "not a sentivec-svm v1 file");
  auto keyed = [&](std::size_t idx, std::string_view key) {
    const auto f = io::split_nonempty(ls[idx], ' ');
    const auto v = f.size() == 2 && f[0] == key ? io::parse_double(f[1]) : std::nullopt;
    if (!v) throw fail(idx + 1, "expected '" + std::string(key) + " <value>'");
    return *v;
  };
  SvmModel svm;
  svm.gamma = keyed(1, "gamma");
  svm.C = keyed(2, "C");
  svm.bias = keyed(3, "b");
  const auto head = io::split_nonempty(ls[4], ' ');
  const auto count = head.size() == 3 && head[0] == "sv" ? io::parse_int(head[1]) : std::nullopt;
  const auto dim = head.size() == 3 ? io::parse_int(head[2]) : std::nullopt;
  if (!count || !dim || *count < 0 || *dim < 0) throw fail(5, "expected 'sv <count> <dim>'");
  for (std::size_t li = 5; li < ls.size(); ++li) {
    if (ls[li].empty()) continue;
    const auto f = io::split_nonempty(ls[li], ' ');
    if (f.size() != static_cast<std::size_t>(*dim) + 1) throw fail(li + 1, "wrong field count");
    std::vector<double> row;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const auto v = io::parse_double(f[k]);
      if (!v) throw fail(li + 1, "non-numeric field");
      if (k == 0) {
        svm.coef.push_back(*v);
      } else {
        row.push_back(*v);
      }
    }
    svm.support_vectors.push_back(std::move(row));
  }
  if (svm.support_vectors.size() != static_cast<std::size_t>(*count)) {
    throw fail(5, "support vector count does not match the file body");
  }
  return svm;
}

}  // namespace sentivec::classify
