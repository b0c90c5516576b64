#include "finstage/error.hpp"

#include <utility>

namespace finstage {

Error::Error(std::string name, std::string payload)
    : std::runtime_error(payload.empty() ? name : name + " " + payload),
      name_(std::move(name)),
      payload_(std::move(payload))
{
}

NotInImage::NotInImage(std::string equivalent)
    : Error("NotInImage", "equivalent=" + (equivalent.empty() ? std::string("none") : equivalent)),
      equivalent_(std::move(equivalent))
{
}

} // namespace finstage
