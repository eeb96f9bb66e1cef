#pragma once

#include <stdexcept>
#include <string>

namespace lajoin {

// bad parameters, malformed input files, precondition violations
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// the requested parameter point is settled by a cited external result,
// not by a construction we implement; `route` says what to do instead
class cited_case : public std::runtime_error {
 public:
  cited_case(const std::string& what, int claimed, std::string route)
      : std::runtime_error(what), claimed_(claimed), route_(std::move(route)) {}
  int claimed() const { return claimed_; }
  const std::string& route() const { return route_; }

 private:
  int claimed_;
  std::string route_;
};

// questions left open by the source results; nothing to construct
class open_problem : public std::runtime_error {
 public:
  explicit open_problem(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lajoin
