# Census module: bounded enumeration and equivalence classification
