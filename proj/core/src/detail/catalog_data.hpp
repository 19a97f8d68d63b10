#pragma once

namespace pencilrank::detail {

/// Contents of data/catalog.json compiled into the library.
const char* embedded_catalog_json();

}  // namespace pencilrank::detail
