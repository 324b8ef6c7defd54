// Copyright 2026 The shadowtomo Authors
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

#include "core/serialize.hpp"

namespace sht {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    fail(ErrorKind::Parse, what);
}

double number_at(const Json &j, const char *context) {
    if (!j.is_number()) {
        parse_fail(std::string("expected a number in ") + context);
    }
    return j.get<double>();
}

Eigen::MatrixXd matrix_field(const Json &j, const char *key, int dim) {
    if (!j.contains(key)) {
        parse_fail(std::string("operator JSON is missing \"") + key + "\"");
    }
    const Json &rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        parse_fail(std::string("\"") + key + "\" must be a " + std::to_string(dim) + "x" +
                   std::to_string(dim) + " array");
    }
    Eigen::MatrixXd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const Json &row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            parse_fail(std::string("\"") + key + "\" rows must have length " +
                       std::to_string(dim));
        }
        for (int c = 0; c < dim; ++c) {
            m(r, c) = number_at(row.at(static_cast<std::size_t>(c)), key);
        }
    }
    return m;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        parse_fail(e.what());
    }
}

Json operator_to_json(const HermitianOperator &op) {
    Json re = Json::array();
    Json im = Json::array();
    for (int r = 0; r < op.dim(); ++r) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (int c = 0; c < op.dim(); ++c) {
            re_row.push_back(op.entry(r, c).real());
            im_row.push_back(op.entry(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return Json{{"dim", op.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HermitianOperator operator_from_json(const Json &j) {
    if (!j.is_object()) {
        parse_fail("operator JSON must be an object");
    }
    if (j.contains("x0") || j.contains("r")) {
        BlochVector b;
        b.x0 = number_at(j.at("x0"), "x0");
        const Json &r = j.at("r");
        if (!r.is_array() || r.size() != 3) {
            parse_fail("\"r\" must have 3 entries");
        }
        for (std::size_t i = 0; i < 3; ++i) {
            b.r[i] = number_at(r.at(i), "r");
        }
        return from_bloch(b);
    }
    if (!j.contains("dim")) {
        parse_fail("operator JSON is missing \"dim\"");
    }
    int dim = j.at("dim").get<int>();
    if (dim < 2) {
        parse_fail("operator dimension must be at least 2");
    }
    Eigen::MatrixXd re = matrix_field(j, "re", dim);
    Eigen::MatrixXd im = j.contains("im") ? matrix_field(j, "im", dim)
                                          : Eigen::MatrixXd::Zero(dim, dim);
    Matrix m = re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
    return HermitianOperator(m);
}

Json povm_to_json(const Povm &povm) {
    Json effects = Json::array();
    for (const auto &effect : povm.effects()) {
        effects.push_back(operator_to_json(effect));
    }
    return Json{{"dim", povm.dim()},
                {"effects", std::move(effects)},
                {"labels", povm.labels()}};
}

Povm povm_from_json(const Json &j) {
    if (!j.is_object()) {
        parse_fail("measurement JSON must be an object");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto &label : j.at("labels")) {
            labels.push_back(label.get<std::string>());
        }
    }
    if (j.contains("bloch")) {
        QubitPovmParams params;
        for (const auto &entry : j.at("bloch")) {
            params.weights.push_back(number_at(entry.at("w"), "bloch.w"));
            const Json &v = entry.at("v");
            if (!v.is_array() || v.size() != 3) {
                parse_fail("\"v\" must have 3 entries");
            }
            std::array<double, 3> dir;
            for (std::size_t i = 0; i < 3; ++i) {
                dir[i] = number_at(v.at(i), "bloch.v");
            }
            params.directions.push_back(dir);
        }
        return qubit_povm(params, std::move(labels));
    }
    if (!j.contains("effects")) {
        parse_fail("measurement JSON needs \"effects\" or \"bloch\"");
    }
    std::vector<HermitianOperator> effects;
    for (const auto &entry : j.at("effects")) {
        effects.push_back(operator_from_json(entry));
    }
    return Povm::validate(std::move(effects), std::move(labels));
}

std::vector<HermitianOperator> observables_from_json(const Json &j) {
    const Json *list = &j;
    if (j.is_object() && j.contains("observables")) {
        list = &j.at("observables");
    }
    if (!list->is_array() || list->empty()) {
        parse_fail("expected a nonempty array of observables");
    }
    std::vector<HermitianOperator> out;
    out.reserve(list->size());
    for (const auto &entry : *list) {
        out.push_back(operator_from_json(entry));
    }
    return out;
}

FactorizedObservables factorized_observables_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("qubits") || !j.contains("observables")) {
        parse_fail("expected {\"qubits\": n, \"observables\": [...]} ");
    }
    FactorizedObservables out;
    out.qubits = j.at("qubits").get<std::size_t>();
    if (out.qubits == 0) {
        parse_fail("\"qubits\" must be positive");
    }
    for (const auto &entry : j.at("observables")) {
        if (!entry.is_object() || !entry.contains("factors")) {
            parse_fail("each observable needs a \"factors\" array");
        }
        std::vector<HermitianOperator> factors;
        for (const auto &factor : entry.at("factors")) {
            factors.push_back(operator_from_json(factor));
        }
        if (factors.size() != out.qubits) {
            fail(ErrorKind::NotFactorized, "observable has " + std::to_string(factors.size()) +
                                               " factors for " + std::to_string(out.qubits) +
                                               " qubits");
        }
        out.factors.push_back(std::move(factors));
    }
    if (out.factors.empty()) {
        parse_fail("no observables given");
    }
    return out;
}

}  // namespace sht
