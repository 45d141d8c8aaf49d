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

#include "blinddelegate/pauli/identities.hpp"

#include <cmath>
#include <functional>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::pauli {

using qsim::Matrix;

std::vector<PauliFrame> slot_values(PauliSlot slot) {
    switch (slot) {
        case PauliSlot::Any:
            return {PauliFrame::I(), PauliFrame::X(), PauliFrame::Z(), PauliFrame::XZ()};
        case PauliSlot::IorX:
            return {PauliFrame::I(), PauliFrame::X()};
        case PauliSlot::ZorXZ:
            return {PauliFrame::Z(), PauliFrame::XZ()};
    }
    return {};
}

FramedWord FramedWord::parse(const std::string &text) {
    FramedWord out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            i++;
            continue;
        }
        if (text[i] != '(') {
            throw ParseError("framed word factors must be parenthesized: " + text);
        }
        std::size_t close = text.find(')', i);
        if (close == std::string::npos || close == i + 1 || text[i + 1] != 'P') {
            throw ParseError("bad framed factor in " + text);
        }
        std::size_t j = i + 2;
        PauliSlot slot = PauliSlot::Any;
        if (text.compare(j, 2, "''") == 0) {
            slot = PauliSlot::ZorXZ;
            j += 2;
        } else if (text[j] == '\'') {
            slot = PauliSlot::IorX;
            j += 1;
        }
        out.factors.push_back({slot, CliffordTWord::parse(text.substr(j, close - j))});
        i = close + 1;
    }
    return out;
}

std::string FramedWord::str() const {
    std::string s;
    for (const auto &f : factors) {
        s += "(P";
        if (f.slot == PauliSlot::IorX) {
            s += "'";
        } else if (f.slot == PauliSlot::ZorXZ) {
            s += "''";
        }
        s += f.word.empty() ? "" : f.word.str();
        s += ")";
    }
    return s;
}

IdentityCheck check_identity(const FramedWord &lhs, const CliffordTWord &rhs) {
    IdentityCheck result;
    result.holds = true;
    Matrix target = rhs.matrix();
    std::vector<PauliFrame> chosen(lhs.factors.size());
    std::function<void(std::size_t)> walk = [&](std::size_t idx) {
        if (idx == lhs.factors.size()) {
            Matrix m = Matrix::Identity(2, 2);
            for (std::size_t f = 0; f < lhs.factors.size(); f++) {
                m = m * chosen[f].matrix() * lhs.factors[f].word.matrix();
            }
            result.assignments++;
            double best = INFINITY;
            for (PauliFrame p : kAllFrames) {
                Matrix candidate = p.matrix() * target;
                Eigen::Index bi = 0, bj = 0;
                candidate.cwiseAbs().maxCoeff(&bi, &bj);
                qsim::cd ph = m(bi, bj) / candidate(bi, bj);
                if (std::abs(ph) > 1e-12) {
                    ph /= std::abs(ph);
                }
                best = std::min(best, (m - ph * candidate).norm());
            }
            result.max_deviation = std::max(result.max_deviation, best);
            if (best > 1e-10) {
                result.holds = false;
            }
            return;
        }
        for (PauliFrame p : slot_values(lhs.factors[idx].slot)) {
            chosen[idx] = p;
            walk(idx + 1);
        }
    };
    walk(0);
    return result;
}

bool verify_identity(const FramedWord &lhs, const CliffordTWord &rhs) {
    return check_identity(lhs, rhs).holds;
}

const std::vector<NamedIdentity> &composition_identities() {
    static const std::vector<NamedIdentity> ids = [] {
        std::vector<NamedIdentity> v;
        auto add = [&](const char *lhs, const char *rhs) {
            v.push_back({std::string(lhs) + "=P" + rhs, FramedWord::parse(lhs), CliffordTWord::parse(rhs)});
        };
        add("(PH)(PH)(PH)", "H");
        add("(PH)(PH)(PSH)", "SH");
        add("(PH)(PSH)(PSH)", "ZS");
        add("(PH)(PH)(PTH)", "TH");
        add("(PSH)(PH)(PTH)", "TdgH");
        add("(PSH)(PH)(PTdgH)", "TH");
        add("(PH)(PH)(PTdgH)", "TdgH");
        add("(PSH)(PH)", "S");
        add("(PS)(PSTH)(P'H)", "T");
        add("(PS)(PSTdgH)(P''H)", "T");
        return v;
    }();
    return ids;
}

}  // namespace blinddelegate::pauli
