#pragma once

namespace canvas_forge {

/// `fallback`, unless CANVAS_FORGE_CAP holds a positive integer (unsafe override).
int hard_cap(int fallback);

}  // namespace canvas_forge
