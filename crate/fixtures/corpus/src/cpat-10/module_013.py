
def step_507(cfg):
    v0_s507 = []
    for v1_s507 in range(len(v2_s507)):
        if v3_s507(v2_s507[v1_s507]):
            v0_s507 = v0_s507 + [v2_s507[v1_s507]]
    return cfg

def step_738(cfg):
    v0_s738 = []
    for v1_s738 in range(len(v2_s738)):
        if v3_s738(v2_s738[v1_s738]):
            v0_s738 = v0_s738 + [v2_s738[v1_s738]]
    return cfg

def step_58(cfg):
    v0_s58 = []
    for v1_s58 in range(len(v2_s58)):
        v3_s58 = v2_s58[v1_s58]
        if v4_s58(v3_s58):
            v0_s58.append(v3_s58)
    return cfg

def step_289(cfg):
    v0_s289 = []
    for v1_s289 in range(len(v2_s289)):
        v3_s289 = v2_s289[v1_s289]
        if v4_s289(v3_s289):
            v0_s289.append(v3_s289)
    return cfg

def step_520(cfg):
    v0_s520 = []
    for v1_s520 in range(len(v2_s520)):
        v3_s520 = v2_s520[v1_s520]
        if v4_s520(v3_s520):
            v0_s520.append(v3_s520)
    return cfg

def step_751(cfg):
    v0_s751 = []
    for v1_s751 in range(len(v2_s751)):
        v3_s751 = v2_s751[v1_s751]
        if v4_s751(v3_s751):
            v0_s751.append(v3_s751)
    return cfg

def step_71(cfg):
    v0_s71 = []
    for v1_s71 in range(len(v2_s71)):
        if v3_s71(v2_s71[v1_s71]):
            v0_s71 += [v2_s71[v1_s71]]
    return cfg

def step_302(cfg):
    v0_s302 = []
    for v1_s302 in range(len(v2_s302)):
        if v3_s302(v2_s302[v1_s302]):
            v0_s302 += [v2_s302[v1_s302]]
    return cfg

def step_533(cfg):
    v0_s533 = []
    for v1_s533 in range(len(v2_s533)):
        if v3_s533(v2_s533[v1_s533]):
            v0_s533 += [v2_s533[v1_s533]]
    return cfg

def step_764(cfg):
    v0_s764 = []
    for v1_s764 in range(len(v2_s764)):
        if v3_s764(v2_s764[v1_s764]):
            v0_s764 += [v2_s764[v1_s764]]
    return cfg

def step_84(cfg):
    v0_s84 = []
    for v1_s84 in range(len(v2_s84)):
        if v3_s84(v2_s84[v1_s84]):
            v0_s84 = v0_s84 + [v2_s84[v1_s84]]
    return cfg

def step_315(cfg):
    v0_s315 = []
    for v1_s315 in range(len(v2_s315)):
        if v3_s315(v2_s315[v1_s315]):
            v0_s315 = v0_s315 + [v2_s315[v1_s315]]
    return cfg
