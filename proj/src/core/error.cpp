#include "credal/error.hpp"

namespace credal {

CapExceededError::CapExceededError(std::size_t count, std::size_t cap)
    : Error("joint model needs " + std::to_string(count) + " generators, cap is "
            + std::to_string(cap))
    , count_(count)
    , cap_(cap)
{
}

}  // namespace credal
