#pragma once

#include <stdexcept>
#include <string>

namespace cml {

// Error taxonomy shared by all modules. The CLI maps every cml_error thrown
// during input handling to exit code 2; failed checks inside an experiment
// become "fail" verdicts instead of exceptions.
class cml_error : public std::runtime_error {
public:
  explicit cml_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

class invalid_input_error : public cml_error {
public:
  using cml_error::cml_error;
};

class resource_limit_error : public cml_error {
public:
  using cml_error::cml_error;
};

class insufficient_data_error : public cml_error {
public:
  using cml_error::cml_error;
};

class not_invertible_error : public cml_error {
public:
  using cml_error::cml_error;
};

class not_applicable_error : public cml_error {
public:
  using cml_error::cml_error;
};

class not_decidable_error : public cml_error {
public:
  using cml_error::cml_error;
};

}  // namespace cml
