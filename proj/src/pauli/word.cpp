// Copyright 2026 The blinddelegate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blinddelegate/pauli/word.hpp"

#include <cctype>
#include <stdexcept>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::pauli {

using qsim::Matrix;

std::string_view letter_name(Letter letter) {
    switch (letter) {
        case Letter::H:
            return "H";
        case Letter::S:
            return "S";
        case Letter::Sdg:
            return "Sdg";
        case Letter::T:
            return "T";
        case Letter::Tdg:
            return "Tdg";
        case Letter::X:
            return "X";
        case Letter::Z:
            return "Z";
    }
    return "?";
}

Matrix letter_matrix(Letter letter) {
    using namespace qsim::gates;
    switch (letter) {
        case Letter::H:
            return H().matrix();
        case Letter::S:
            return S().matrix();
        case Letter::Sdg:
            return Sdg().matrix();
        case Letter::T:
            return T().matrix();
        case Letter::Tdg:
            return Tdg().matrix();
        case Letter::X:
            return X().matrix();
        case Letter::Z:
            return Z().matrix();
    }
    throw std::logic_error("unknown letter");
}

CliffordTWord CliffordTWord::parse(std::string_view text) {
    std::vector<Letter> out;
    std::size_t i = 0;
    auto dagger_at = [&](std::size_t j) -> std::size_t {
        if (text.substr(j, 3) == "dg" || text.substr(j, 2) == "dg") {
            return 2;
        }
        if (text.substr(j, 3) == "\xE2\x80\xA0") {  // U+2020 dagger
            return 3;
        }
        return 0;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '*' || c == '.') {
            i++;
            continue;
        }
        i++;
        std::size_t dg = dagger_at(i);
        switch (c) {
            case 'H':
                out.push_back(Letter::H);
                break;
            case 'X':
                out.push_back(Letter::X);
                break;
            case 'Z':
                out.push_back(Letter::Z);
                break;
            case 'I':
                break;
            case 'S':
                out.push_back(dg ? Letter::Sdg : Letter::S);
                i += dg;
                break;
            case 'T':
                out.push_back(dg ? Letter::Tdg : Letter::T);
                i += dg;
                break;
            default:
                throw ParseError(std::string("unknown letter '") + c + "' in word '" + std::string(text) + "'");
        }
    }
    return CliffordTWord(std::move(out));
}

CliffordTWord CliffordTWord::from_frame(PauliFrame frame) {
    std::vector<Letter> out;
    if (frame.x) {
        out.push_back(Letter::X);
    }
    if (frame.z) {
        out.push_back(Letter::Z);
    }
    return CliffordTWord(std::move(out));
}

Matrix CliffordTWord::matrix() const {
    Matrix m = Matrix::Identity(2, 2);
    for (Letter l : letters_) {
        m = m * letter_matrix(l);
    }
    return m;
}

std::string CliffordTWord::str() const {
    if (letters_.empty()) {
        return "I";
    }
    std::string s;
    for (Letter l : letters_) {
        s += letter_name(l);
    }
    return s;
}

CliffordTWord CliffordTWord::operator*(const CliffordTWord &later_applied_first) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), later_applied_first.letters_.begin(), later_applied_first.letters_.end());
    return CliffordTWord(std::move(out));
}

const std::vector<std::pair<std::string, CliffordTWord>> &canonical_dictionary() {
    static const std::vector<std::pair<std::string, CliffordTWord>> dict = [] {
        std::vector<std::pair<std::string, CliffordTWord>> d;
        for (const char *name : {"I", "H", "S", "Sdg", "SH", "SdgH", "HS", "HSdg", "HSH", "T", "Tdg", "TH",
                                 "TdgH", "HT", "HTdg", "Z", "X", "XZ"}) {
            d.emplace_back(name, CliffordTWord::parse(name));
        }
        return d;
    }();
    return dict;
}

bool same_class(const Matrix &a, const Matrix &b, double tol) {
    return match_left_pauli(a, b, tol).has_value();
}

Reduction reduce_matrix(const Matrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("reduce works on one-qubit words");
    }
    static const std::vector<std::pair<std::string, Matrix>> dict = [] {
        std::vector<std::pair<std::string, Matrix>> d;
        for (const auto &[name, word] : canonical_dictionary()) {
            d.emplace_back(name, word.matrix());
        }
        return d;
    }();
    for (const auto &[name, c] : dict) {
        if (auto p = match_left_pauli(m, c, 1e-10)) {
            return Reduction{(*p)[0], c, name};
        }
    }
    // Not in the dictionary: the word is its own residual.
    Eigen::Index bi = 0, bj = 0;
    m.cwiseAbs().maxCoeff(&bi, &bj);
    qsim::cd ph = m(bi, bj) / std::abs(m(bi, bj));
    return Reduction{PauliFrame::I(), m / ph, ""};
}

Reduction reduce(const CliffordTWord &word) {
    Matrix m = word.matrix();
    Reduction r = reduce_matrix(m);
    if (!qsim::equal_up_to_phase(m, r.frame.matrix() * r.canonical, 1e-10)) {
        throw std::logic_error("reduce failed its own soundness check for " + word.str());
    }
    return r;
}

std::pair<PauliFrame, CliffordTWord> propagate_through_word(const CliffordTWord &word, PauliFrame frame) {
    std::vector<Letter> out = word.letters();
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
        switch (*it) {
            case Letter::H:
                frame = propagate_through_H(frame);
                break;
            case Letter::S:
            case Letter::Sdg:
            case Letter::T:
            case Letter::Tdg:
                if (frame.x) {
                    // R_theta X = e^{i theta} X R_{-theta}.
                    static constexpr Letter flipped[] = {Letter::H, Letter::Sdg, Letter::S, Letter::Tdg, Letter::T};
                    *it = flipped[static_cast<int>(*it)];
                }
                break;
            case Letter::X:
            case Letter::Z:
                break;
        }
    }
    return {frame, CliffordTWord(std::move(out))};
}

}  // namespace blinddelegate::pauli
