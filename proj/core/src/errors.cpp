#include "parsemble/errors.hpp"

namespace parsemble {

const char* code_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnbalancedBrackets: return "unbalanced-brackets";
    case ErrorCode::EmptyNode: return "empty-node";
    case ErrorCode::TrailingInput: return "trailing-input";
    case ErrorCode::MalformedNode: return "malformed-node";
    case ErrorCode::LineCountMismatch: return "line-count-mismatch";
    case ErrorCode::TokenCountMismatch: return "token-count-mismatch";
    case ErrorCode::TokenStringMismatch: return "token-string-mismatch";
    case ErrorCode::EmptySentence: return "empty-sentence";
    case ErrorCode::CrossingInput: return "crossing-input";
    case ErrorCode::MissingGold: return "missing-gold";
    case ErrorCode::EmptyTrainingSet: return "empty-training-set";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::ModelKMismatch: return "model-k-mismatch";
    case ErrorCode::ModelFormat: return "model-format";
    case ErrorCode::EmptyCorpus: return "empty-corpus";
    case ErrorCode::AlignmentMismatch: return "alignment-mismatch";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace parsemble
