//! Curvature endomorphism q(R).
