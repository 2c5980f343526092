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

#include <cmath>
#include <filesystem>
#include <ostream>

#include "sentivec/embedding.hpp"
#include "sentivec/error.hpp"
#include "sentivec/io.hpp"

namespace sentivec::embedding {
namespace {

const std::string kModule = "embedding";

void write_matrix(std::ostream& os, const corpus::Vocab& vocab, const Matrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  std::string line;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    line.clear();
    line += vocab.words()[i];
    for (const double v : m.row(i)) {
      line += ' ';
      io::append_fixed(line, v, 6);
    }
    line += '\n';
    os << line;
  }
}

struct ParsedMatrix {
  std::vector<std::string> words;
  Matrix values;
};

ParsedMatrix parse_matrix(const std::string& path) {
  const std::string text = io::read_file(path, kModule);
  const auto ls = io::lines(text);
  if (ls.empty()) throw Error(kModule, path + ": malformed header at line 1: empty file");
  const auto header = io::split_nonempty(ls[0], ' ');
  std::optional<std::int64_t> rows, cols;
  if (header.size() == 2) {
    rows = io::parse_int(header[0]);
    cols = io::parse_int(header[1]);
  }
  if (!rows || !cols || *rows < 0 || *cols < 1) {
    throw Error(kModule, path + ": malformed header at line 1: expected '<vocab_size> <dim>'");
  }
  const auto n = static_cast<std::size_t>(*rows);
  const auto d = static_cast<std::size_t>(*cols);
  ParsedMatrix out;
  out.values = Matrix(n, d);
  out.words.reserve(n);
  std::size_t row = 0;
  for (std::size_t li = 1; li < ls.size(); ++li) {
    if (ls[li].empty()) continue;
    if (row == n) {
      throw Error(kModule, path + ": more rows than the header's " + std::to_string(n) +
                               " (extra row at line " + std::to_string(li + 1) + ")");
    }
    const auto fields = io::split_nonempty(ls[li], ' ');
    if (fields.size() != d + 1) {
      throw Error(kModule, path + ": row " + std::to_string(row) + " (line " +
                               std::to_string(li + 1) + ") has " +
                               std::to_string(fields.empty() ? 0 : fields.size() - 1) +
                               " values, expected " + std::to_string(d));
    }
    out.words.emplace_back(fields[0]);
    auto dst = out.values.row(row);
    for (std::size_t j = 0; j < d; ++j) {
      const auto v = io::parse_double(fields[j + 1]);
      if (!v || !std::isfinite(*v)) {
        throw Error(kModule, path + ": non-numeric field '" + std::string(fields[j + 1]) +
                                 "' at line " + std::to_string(li + 1) + ", column " +
                                 std::to_string(j + 2));
      }
      dst[j] = *v;
    }
    ++row;
  }
  if (row != n) {
    throw Error(kModule, path + ": header declares " + std::to_string(n) +
                             " rows but file ends after row " + std::to_string(row));
  }
  return out;
}

}  // namespace

std::string sidecar_path(const std::string& path) { return path + ".out"; }

void save_vectors(const EmbeddingModel& model, const std::string& path, bool with_output) {
  io::write_atomic(
      path, [&](std::ostream& os) { write_matrix(os, model.vocab, model.input); }, kModule);
  if (with_output) {
    io::write_atomic(
        sidecar_path(path), [&](std::ostream& os) { write_matrix(os, model.vocab, model.output); },
        kModule);
  }
}

EmbeddingModel load_vectors(const std::string& path) {
  ParsedMatrix in = parse_matrix(path);
  EmbeddingModel m;
  try {
    m.vocab = corpus::Vocab(in.words, std::vector<std::uint64_t>(in.words.size(), 0), 0);
  } catch (const Error& e) {
    throw Error(kModule, path + ": " + e.what());
  }
  m.dim = in.values.cols();
  m.input = std::move(in.values);
  const std::string side = sidecar_path(path);
  std::error_code ec;
  if (std::filesystem::exists(side, ec)) {
    ParsedMatrix out = parse_matrix(side);
    if (out.words != in.words || out.values.cols() != m.dim) {
      throw Error(kModule, side + ": sidecar words or dimension differ from " + path);
    }
    m.output = std::move(out.values);
  } else {
    m.output = Matrix(m.input.rows(), m.dim);
  }
  return m;
}

}  // namespace sentivec::embedding
