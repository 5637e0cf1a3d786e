#include "cka/label.hpp"

#include <stdexcept>

namespace cka {

Label::Label(std::string token) : token_(std::move(token)) {
	if (token_.empty())
		throw std::invalid_argument("label token must be nonempty");
}

} // namespace cka
