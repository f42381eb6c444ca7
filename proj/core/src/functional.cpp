// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/functional.hpp"

#include "regenboot/error.hpp"

namespace regenboot {

NamedFunctional builtin_functional(std::string_view name) {
  if (name == "inv_square") return {"inv_square", inverse_square, kInverseSquareTarget};
  if (name == "one") return {"one", [](State) { return 1.0; }, std::nullopt};
  throw InvalidArgument("unknown functional '" + std::string(name) + "'");
}

}  // namespace regenboot
