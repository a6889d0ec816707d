// Copyright 2026 The kdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kdsim/state_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kdsim {

namespace {

RealMatrix read_square(const nlohmann::json &rows, Eigen::Index d, const char *name) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
        throw std::invalid_argument(std::string("\"") + name + "\" must be an array of " + std::to_string(d) + " rows");
    }
    RealMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        const auto &row = rows[r];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw std::invalid_argument(std::string("\"") + name + "\" row " + std::to_string(r) + " must have " +
                                        std::to_string(d) + " entries");
        }
        for (Eigen::Index c = 0; c < d; c++) {
            if (!row[c].is_number()) {
                throw std::invalid_argument(std::string("\"") + name + "\"[" + std::to_string(r) + "][" +
                                            std::to_string(c) + "] is not a number");
            }
            m(r, c) = row[c].get<double>();
        }
    }
    return m;
}

template <typename Matrix>
nlohmann::json rows_of(const Matrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

DensityMatrix density_matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("state JSON must be an object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("state JSON needs an integer \"n\"");
    }
    int n = j["n"].get<int>();
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    if (!j.contains("re")) {
        throw std::invalid_argument("state JSON needs \"re\"");
    }
    RealMatrix re = read_square(j["re"], d, "re");
    RealMatrix im = j.contains("im") ? read_square(j["im"], d, "im") : RealMatrix::Zero(d, d);
    ComplexMatrix mat(d, d);
    mat.real() = re;
    mat.imag() = im;
    return DensityMatrix(n, mat);
}

DensityMatrix load_density_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open state file " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return density_matrix_from_json(j);
}

nlohmann::json to_json(const DensityMatrix &rho) {
    return {{"n", rho.n}, {"re", rows_of(rho.mat.real())}, {"im", rows_of(rho.mat.imag())}};
}

nlohmann::json to_json(const KDDistribution &q) {
    return {{"n", q.n}, {"re", rows_of(q.table.real())}, {"im", rows_of(q.table.imag())}};
}

}  // namespace kdsim
