#ifndef SB_ERRORS_HPP_
#define SB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sb {

struct error : std::runtime_error {
  explicit error(const std::string& m) : std::runtime_error(m) {}
};

#define SB_DEFINE_ERROR(Name)                                   \
  struct Name : error {                                         \
    explicit Name(const std::string& m = #Name) : error(m) {}   \
  }

SB_DEFINE_ERROR(DivisionByZero);
SB_DEFINE_ERROR(ZeroRadicand);
SB_DEFINE_ERROR(DuplicateGeneratorName);
SB_DEFINE_ERROR(TooManyLayers);
SB_DEFINE_ERROR(TowerMismatch);
SB_DEFINE_ERROR(NormNotOne);
SB_DEFINE_ERROR(ExhaustedCandidates);
SB_DEFINE_ERROR(ZeroInput);
SB_DEFINE_ERROR(Singular);
SB_DEFINE_ERROR(DegenerateColumn);
SB_DEFINE_ERROR(XiZero);
SB_DEFINE_ERROR(XiIsCube);
SB_DEFINE_ERROR(ZeroVector);
SB_DEFINE_ERROR(SingularResult);
SB_DEFINE_ERROR(NotRepresentant);
SB_DEFINE_ERROR(ScalarInput);
SB_DEFINE_ERROR(NotMonomialForm);
SB_DEFINE_ERROR(NormMismatch);
SB_DEFINE_ERROR(DegenerateComposition);
SB_DEFINE_ERROR(ParityViolation);
SB_DEFINE_ERROR(DegreeParityMismatch);
SB_DEFINE_ERROR(BasePoint);
SB_DEFINE_ERROR(FormulaMismatch);
SB_DEFINE_ERROR(LedgerFailure);
SB_DEFINE_ERROR(MissingContext);
SB_DEFINE_ERROR(NotAnEndomorphismWord);
SB_DEFINE_ERROR(MissingPrime);
SB_DEFINE_ERROR(DistinguishedClass);
SB_DEFINE_ERROR(WordInvalid);
SB_DEFINE_ERROR(UnknownName);
SB_DEFINE_ERROR(IoError);

#undef SB_DEFINE_ERROR

/// Parse failure with source position, 1-based.
struct SyntaxError : error {
  int line;
  int col;
  SyntaxError(int line_, int col_, const std::string& what_)
      : error("syntax error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + what_),
        line(line_), col(col_) {}
};

}  // namespace sb

#endif  // SB_ERRORS_HPP_
