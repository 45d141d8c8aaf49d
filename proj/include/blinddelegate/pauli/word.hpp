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

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blinddelegate/pauli/frame.hpp"

namespace blinddelegate::pauli {

enum class Letter { H, S, Sdg, T, Tdg, X, Z };

std::string_view letter_name(Letter letter);
qsim::Matrix letter_matrix(Letter letter);

/// Word over {H, S, S^dag, T, T^dag, X, Z}. Written left to right, the
/// rightmost letter acts first, exactly like a product of operators.
class CliffordTWord {
   public:
    CliffordTWord() = default;
    CliffordTWord(std::initializer_list<Letter> letters) : letters_(letters) {
    }
    explicit CliffordTWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    }

    /// Accepts "S Tdg H", "STdgH", "S T† H" or "I" (empty word).
    static CliffordTWord parse(std::string_view text);
    static CliffordTWord from_frame(PauliFrame frame);

    const std::vector<Letter> &letters() const {
        return letters_;
    }
    bool empty() const {
        return letters_.empty();
    }
    std::size_t size() const {
        return letters_.size();
    }

    qsim::Matrix matrix() const;
    std::string str() const;

    /// (a * b) is "a after b".
    CliffordTWord operator*(const CliffordTWord &later_applied_first) const;
    bool operator==(const CliffordTWord &) const = default;

   private:
    std::vector<Letter> letters_;
};

/// word = frame * canonical up to global phase.
struct Reduction {
    PauliFrame frame;
    qsim::Matrix canonical;
    /// Dictionary name ("TH", "S", ...) or empty when the class is not listed.
    std::string name;
};

Reduction reduce(const CliffordTWord &word);
Reduction reduce_matrix(const qsim::Matrix &m);

/// Classes named by reduce, in priority order.
const std::vector<std::pair<std::string, CliffordTWord>> &canonical_dictionary();

/// True iff a = e^{i phi} P b for some one-qubit Pauli P.
bool same_class(const qsim::Matrix &a, const qsim::Matrix &b, double tol = 1e-10);

/// Moves a frame from the right of a word to its left:
/// word * frame = frame' * word' up to phase, letter by letter.
std::pair<PauliFrame, CliffordTWord> propagate_through_word(const CliffordTWord &word, PauliFrame frame);

}  // namespace blinddelegate::pauli
