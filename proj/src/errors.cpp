#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out = "invalid parameters";
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? "; " : ": ") + items[k];
  return out;
}

}  // namespace

InvalidParameters::InvalidParameters(std::vector<std::string> violations)
    : InputError(join(violations)), violations_(std::move(violations)) {}

}  // namespace seveninv
