#pragma once

#include <stdexcept>
#include <string>

namespace parsemble {

enum class ErrorCode {
  UnbalancedBrackets,
  EmptyNode,
  TrailingInput,
  MalformedNode,
  LineCountMismatch,
  TokenCountMismatch,
  TokenStringMismatch,
  EmptySentence,
  CrossingInput,
  MissingGold,
  EmptyTrainingSet,
  LengthMismatch,
  ModelKMismatch,
  ModelFormat,
  EmptyCorpus,
  AlignmentMismatch,
  InvalidConfig,
  Io,
  Usage,
};

// Stable machine-parseable code string, e.g. "unbalanced-brackets".
const char* code_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_string() const { return parsemble::code_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace parsemble
