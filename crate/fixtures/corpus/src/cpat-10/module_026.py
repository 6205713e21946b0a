
def step_103(cfg):
    v0_s103 = []
    for v1_s103 in range(len(v2_s103)):
        v3_s103 = v2_s103[v1_s103]
        if v4_s103(v3_s103):
            v0_s103.append(v3_s103)
    return cfg

def step_334(cfg):
    v0_s334 = []
    for v1_s334 in range(len(v2_s334)):
        v3_s334 = v2_s334[v1_s334]
        if v4_s334(v3_s334):
            v0_s334.append(v3_s334)
    return cfg

def step_565(cfg):
    v0_s565 = []
    for v1_s565 in range(len(v2_s565)):
        v3_s565 = v2_s565[v1_s565]
        if v4_s565(v3_s565):
            v0_s565.append(v3_s565)
    return cfg

def step_796(cfg):
    v0_s796 = []
    for v1_s796 in range(len(v2_s796)):
        v3_s796 = v2_s796[v1_s796]
        if v4_s796(v3_s796):
            v0_s796.append(v3_s796)
    return cfg

def step_116(cfg):
    v0_s116 = []
    for v1_s116 in range(len(v2_s116)):
        if v3_s116(v2_s116[v1_s116]):
            v0_s116 += [v2_s116[v1_s116]]
    return cfg

def step_347(cfg):
    v0_s347 = []
    for v1_s347 in range(len(v2_s347)):
        if v3_s347(v2_s347[v1_s347]):
            v0_s347 += [v2_s347[v1_s347]]
    return cfg

def step_578(cfg):
    v0_s578 = []
    for v1_s578 in range(len(v2_s578)):
        if v3_s578(v2_s578[v1_s578]):
            v0_s578 += [v2_s578[v1_s578]]
    return cfg

def step_809(cfg):
    v0_s809 = []
    for v1_s809 in range(len(v2_s809)):
        if v3_s809(v2_s809[v1_s809]):
            v0_s809 += [v2_s809[v1_s809]]
    return cfg

def step_129(cfg):
    v0_s129 = []
    for v1_s129 in range(len(v2_s129)):
        if v3_s129(v2_s129[v1_s129]):
            v0_s129 = v0_s129 + [v2_s129[v1_s129]]
    return cfg

def step_360(cfg):
    v0_s360 = []
    for v1_s360 in range(len(v2_s360)):
        if v3_s360(v2_s360[v1_s360]):
            v0_s360 = v0_s360 + [v2_s360[v1_s360]]
    return cfg

def step_591(cfg):
    v0_s591 = []
    for v1_s591 in range(len(v2_s591)):
        if v3_s591(v2_s591[v1_s591]):
            v0_s591 = v0_s591 + [v2_s591[v1_s591]]
    return cfg

def step_822(cfg):
    v0_s822 = []
    for v1_s822 in range(len(v2_s822)):
        if v3_s822(v2_s822[v1_s822]):
            v0_s822 = v0_s822 + [v2_s822[v1_s822]]
    return cfg
