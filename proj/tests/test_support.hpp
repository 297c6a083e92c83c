#pragma once

#include "gfactor/database.hpp"

namespace testsupport {

// Shipped parameter file, loaded once per test binary.
inline const gfactor::MaterialsDatabase& shipped_db() {
  static const gfactor::MaterialsDatabase db =
      gfactor::load_database_file(GFACTOR_DATA_FILE);
  return db;
}

}  // namespace testsupport
