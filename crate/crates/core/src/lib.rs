pub mod ring;
pub mod diagram;
pub mod skein;
pub mod web;
pub mod clasper;
pub mod covers;
pub mod weights;
pub mod json;
pub mod verify;
