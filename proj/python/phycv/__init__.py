"""Physics-inspired image processing: PST, PAGE and VEViD.

Images are float arrays in [0, 1], shaped (H, W) or (H, W, 3) RGB.
"""

from ._core import (
    Error,
    InvalidDimension,
    InvalidParameter,
    LowpassSpec,
    PageDetector,
    PageParams,
    PostprocessParams,
    PstDetector,
    PstParams,
    ShapeError,
    VevidChannel,
    VevidEnhancer,
    VevidParams,
    apply_stretch_2d,
    frequency_grid,
    hsv_to_rgb,
    page,
    page_kernel,
    page_visualize,
    pst,
    pst_kernel,
    pst_phase_profile,
    rgb_to_hsv,
    vevid,
    vevid_kernel,
    vevid_lite_transfer,
)

__all__ = [name for name in dir() if not name.startswith("_")]
