#pragma once

namespace braidsep::detail {

// Default catalog shipped with the build; same schema as user-supplied
// catalog files.
const char* embedded_catalog_json();

}  // namespace braidsep::detail
