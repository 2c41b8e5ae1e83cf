pub mod catalog;
pub mod decomp;
pub mod exactlin;
pub mod existence;
pub mod format;
pub mod geodesic;
pub mod liealg;
pub mod sympoly;
pub mod tables;
