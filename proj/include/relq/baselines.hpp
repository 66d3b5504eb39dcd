#pragma once

#include <vector>

#include "relq/evalscore.hpp"

namespace relq {

// Copies the first gold answer (NIL for negatives). Scores 1.0 by
// construction; used to validate the harness end to end.
std::vector<Prediction> oracle_predict(const std::vector<RCExample>& gold);

// Predicts NIL for everything.
std::vector<Prediction> nil_predict(const std::vector<RCExample>& gold);

// Weak deterministic floor: the first run of two or more consecutive
// capitalized tokens in the context that does not occur in the question;
// NIL when there is none.
std::vector<Prediction> heuristic_predict(const std::vector<RCExample>& examples);

}  // namespace relq
